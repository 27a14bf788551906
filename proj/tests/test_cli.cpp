#include <doctest.h>

#include "bettilab/constructions.hpp"
#include "bettilab/driver.hpp"
#include "bettilab/resolution.hpp"
#include "bettilab/ring_io.hpp"

#include <functional>

using namespace bettilab;

TEST_CASE("reports are byte-identical across reruns, timings aside")
{
    DriverOptions opt;
    opt.seed = 99;
    RunReport a = run_verify_gring(3, 3, 3, opt);
    RunReport b = run_verify_gring(3, 3, 3, opt);
    CHECK(a.deterministic_dump() == b.deterministic_dump());
    CHECK(std::hash<std::string>{}(a.deterministic_dump()) ==
          std::hash<std::string>{}(b.deterministic_dump()));

    // a threaded run assembles the same report as a serial one
    DriverOptions two = opt;
    two.threads = 2;
    RunReport c = run_verify_gring(3, 3, 3, two);
    CHECK(a.deterministic_dump() == c.deterministic_dump());
}

TEST_CASE("compare run on the residue field of a complete intersection")
{
    RingSpec R = parse_ring_spec("ring R { prime = 32003; vars = x, y; ideal = x^2, y^2; }");
    DriverOptions opt;
    opt.imax = 6;
    RunReport rep = run_compare(R, residue_field_gens(R), "k", opt);
    CHECK(rep.json()["results"]["verdict"] == "PASS");
    bool sawCi = false, sawGolod = false;
    for (auto& chk : rep.json()["results"]["checks"]) {
        if (chk["formula"] == "graded_ci_pk") {
            sawCi = true;
            CHECK(chk["match"].get<bool>());
            CHECK(chk["cx"].get<int>() == 2);
            CHECK(chk["gn"].get<int>() == 0);
        }
        if (chk["formula"] == "golod_pk") {
            sawGolod = true;
            CHECK_FALSE(chk["match"].get<bool>()); // codim-2 c.i. is not Golod
        }
    }
    CHECK(sawCi);
    CHECK(sawGolod);
}

TEST_CASE("compare run on a cyclic module over an optimal family")
{
    OptimalFamily fam = optimal_family(2, 2, 1, 1);
    DriverOptions opt;
    opt.imax = 10;
    RunReport rep = run_compare(fam.R, fam.Stilde.gens, fam.Stilde.name, opt);
    CHECK(rep.json()["results"]["verdict"] == "PASS");
    CHECK(rep.json()["results"]["moduleRingGolod"].get<bool>());
    auto& chk = rep.json()["results"]["checks"][0];
    CHECK(chk["formula"] == "golod_residue_series");
    CHECK(chk["gn"].get<int>() == 0);
    CHECK(chk["diffs"].empty());
}

TEST_CASE("verify grids give all-pass summaries on small bounds")
{
    DriverOptions opt;
    opt.seed = 5;
    CHECK(summarize(run_verify_optimal(2, opt, false)).all_ok());
    CHECK(summarize(run_verify_family(20, opt)).all_ok());
    CHECK(summarize(run_verify_loewy(2, opt)).all_ok());
    RunReport mm = run_verify_minmult(3, 4, opt);
    CHECK(summarize(mm).all_ok());
}

TEST_CASE("construct outputs parse back and carry the manifest")
{
    DriverOptions opt;
    ConstructOutput out = run_construct_optimal(3, 3, 1, 0, opt);
    REQUIRE(out.files.size() == 2);
    RingSpec R = parse_ring_spec(out.files[0].second);
    RingSpec S = parse_ring_spec(out.files[1].second);
    CHECK(R.e == 3);
    CHECK(S.e == 3);
    nlohmann::json manifest = nlohmann::json::parse(out.manifest);
    CHECK(manifest["predictedGn"] == 1);
    CHECK(manifest["files"].size() == 2);

    ConstructOutput st = run_construct_staircase(2, 2, 3, opt);
    RingSpec J = parse_ring_spec(st.files[0].second);
    CHECK(J.gens.size() == 13);
}

TEST_CASE("csv and table renderings contain the verdict rows")
{
    DriverOptions opt;
    RunReport rep = run_verify_gring(2, 2, 1, opt);
    std::string csv = verdict_csv(rep);
    CHECK(csv.find("verdict") != std::string::npos);
    CHECK(csv.find("PASS") != std::string::npos);
    std::string table = verdict_table(rep);
    CHECK(table.find("summary:") != std::string::npos);
}
