#include <CLI11.hpp>

#include "bettilab/constructions.hpp"
#include "bettilab/driver.hpp"
#include "bettilab/formulas.hpp"
#include "bettilab/graded_algebra.hpp"
#include "bettilab/resolution.hpp"
#include "bettilab/ring_io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace bettilab;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RingSpec pick_ring(const std::vector<RingSpec>& blocks, const std::string& name)
{
    if (name.empty())
        return blocks.front();
    for (auto& b : blocks)
        if (b.name == name)
            return b;
    throw std::runtime_error("no ring block named '" + name + "'");
}

std::vector<HomogPoly> pick_module(const std::vector<RingSpec>& blocks, const RingSpec& ring,
                                   const std::string& moduleName)
{
    if (moduleName == "k")
        return residue_field_gens(ring);
    for (auto& b : blocks) {
        if (b.name != moduleName)
            continue;
        if (b.p != ring.p || b.vars != ring.vars)
            throw std::runtime_error("module block '" + moduleName +
                                     "' lives over a different polynomial ring");
        return b.gens;
    }
    throw std::runtime_error("no module block named '" + moduleName + "' (use k for the residue field)");
}

struct OutputFlags {
    bool json = false;
    bool csv = false;
    std::string outPath;
};

void emit(const RunReport& rep, const OutputFlags& of, const std::string& humanText)
{
    std::string body;
    if (of.json)
        body = rep.dump() + "\n";
    else if (of.csv)
        body = verdict_csv(rep);
    else
        body = humanText;
    if (of.outPath.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(of.outPath);
        out << body;
    }
}

BiPoly poly_from_coeffs(const std::vector<long long>& coeffs)
{
    BiPoly p;
    for (size_t i = 0; i < coeffs.size(); ++i)
        p.add_term(0, static_cast<int>(i), Int(coeffs[i]));
    return p;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bettilab: exact Poincare/Hilbert series formulas for graded complete "
                 "intersections, cross-validated against a brute-force minimal free "
                 "resolution engine over a prime field"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");
    app.fallthrough();
    // subcommands keep only the long help flag so --h stays available for the
    // grade parameter
    auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->set_help_flag("--help", "print help");
        s->fallthrough(); // global flags may follow the subcommand
        return s;
    };

    DriverOptions opt;
    OutputFlags of;
    app.add_option("--prime", opt.prime, "prime field characteristic")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed of the splitmix64 generator")->capture_default_str();
    app.add_option("--trials", opt.trials, "randomized certification trials")
        ->capture_default_str();
    int capFlag = -1;
    app.add_option("--cap", capFlag, "degree cap of the randomized dimension probe");
    int threadsFlag = 0;
    app.add_option("--threads", threadsFlag,
                   "worker pool bound (default: BETTILAB_THREADS or hardware)");
    app.add_flag("--json", of.json, "emit the full JSON report");
    app.add_flag("--csv", of.csv, "emit verdict rows as CSV");
    app.add_option("-o,--output", of.outPath, "write the report to a file");

    // construct
    auto* construct = app.add_subcommand("construct", "emit ring-spec files for the built-in families");
    auto* cOpt = sub(construct, "optimal", "the granularity-optimal family");
    int d = 2, c = 2, q = 1, a = 0;
    cOpt->add_option("--d", d)->required();
    cOpt->add_option("--c", c)->required();
    cOpt->add_option("--q", q)->required();
    cOpt->add_option("--a", a)->required();
    std::string outDir = ".";
    cOpt->add_option("--dir", outDir, "output directory");
    auto* cStair = sub(construct, "staircase", "B/(I(U) + (x)^{s+1}) for the staircase U");
    int ss = 2, hh = 1, ee = 1;
    cStair->add_option("--s", ss)->required();
    cStair->add_option("--h", hh)->required();
    cStair->add_option("--e", ee)->required();
    cStair->add_option("--dir", outDir, "output directory");

    // series
    auto* series = app.add_subcommand("series", "closed-form series");
    auto* sTate = sub(series, "tate", "(1+z)^dim/(1-z)^codim");
    int dimR = 0, codimR = 0;
    sTate->add_option("--dim", dimR)->required();
    sTate->add_option("--codim", codimR)->required();
    auto* sCi = sub(series, "gradedci", "(1+yz)^e / prod(1 - y^n z^2)");
    int sciE = 1;
    std::vector<int> sciDegs;
    sCi->add_option("--e", sciE)->required();
    sCi->add_option("--degrees", sciDegs, "relation degrees")->required();
    auto* sDet = sub(series, "detpower", "z^2 P^Q_J for J = I(U) + (u)^{s+1}");
    sDet->add_option("--s", ss)->required();
    sDet->add_option("--h", hh)->required();
    sDet->add_option("--e", ee)->required();
    auto* sAdeq = sub(series, "adequate", "P^B_{I(U)} for the adequate matrix");
    sAdeq->add_option("--s", ss)->required();
    sAdeq->add_option("--h", hh)->required();
    sAdeq->add_option("--e", ee)->required();
    auto* sRes = sub(series, "golodresidue", "the Golod residue-ring series");
    int ra = 0, rc = 0, rd = 0, re = 0;
    std::vector<long long> pqjCoeffs;
    sRes->add_option("--a", ra)->required();
    sRes->add_option("--c", rc)->required();
    sRes->add_option("--d", rd)->required();
    sRes->add_option("--e", re)->required();
    sRes->add_option("--pqj", pqjCoeffs, "coefficients of P^Q_J, ascending in z")->required();
    auto* sBound = sub(series, "bound", "max{c - q - 1, 0}");
    int bc = 0, bq = 0;
    sBound->add_option("--c", bc)->required();
    sBound->add_option("--q", bq)->required();
    auto* sGring = sub(series, "gring", "the four-branch granularity case formula");
    int gc = 0, gd = 0, ge = 1, ga = 0, gh = 1;
    sGring->add_option("--c", gc)->required();
    sGring->add_option("--d", gd)->required();
    sGring->add_option("--e", ge)->required();
    sGring->add_option("--a", ga)->required();
    sGring->add_option("--h", gh)->required();

    // hilbert / resolve / compare
    std::string file, ringName, moduleName = "k";
    int jmaxFlag = -1;
    auto* hilb = app.add_subcommand("hilbert", "Hilbert data of a ring spec");
    hilb->add_option("file", file)->required();
    hilb->add_option("--ring", ringName, "ring block name (default: first block)");
    hilb->add_option("--jmax", jmaxFlag, "degrees tracked");
    auto* resolve = app.add_subcommand("resolve", "minimal graded free resolution oracle");
    resolve->add_option("file", file)->required();
    resolve->add_option("--ring", ringName);
    resolve->add_option("--module", moduleName, "k or a ring block name defining the ideal");
    resolve->add_option("--imax", opt.imax)->capture_default_str();
    resolve->add_option("--jmax", jmaxFlag);
    auto* compare = app.add_subcommand("compare", "oracle vs every applicable closed formula");
    compare->add_option("file", file)->required();
    compare->add_option("--ring", ringName);
    compare->add_option("--module", moduleName);
    compare->add_option("--imax", opt.imax)->capture_default_str();
    compare->add_option("--jmax", jmaxFlag);

    // verify
    auto* verify = app.add_subcommand("verify", "theorem verification grids");
    auto* vOpt = sub(verify, "optimal", "the optimal-family grid");
    int dmax = 3;
    vOpt->add_option("--dmax", dmax)->capture_default_str();
    vOpt->add_option("--imax", opt.imax)->capture_default_str();
    bool noOracle = false;
    vOpt->add_flag("--no-oracle", noOracle, "skip the oracle corner cases");
    auto* vGring = sub(verify, "gring", "the mechanized case analysis");
    int vgd = 5, vge = 5, vga = 6;
    vGring->add_option("--dmax", vgd)->capture_default_str();
    vGring->add_option("--emax", vge)->capture_default_str();
    vGring->add_option("--amax", vga)->capture_default_str();
    auto* vMin = sub(verify, "minmult", "minimal multiplicity samples");
    int vme = 4, vsamples = 20;
    vMin->add_option("--emax", vme)->capture_default_str();
    vMin->add_option("--samples", vsamples)->capture_default_str();
    auto* vFam = sub(verify, "family", "the dense-open sampling fixtures");
    int vft = 50;
    vFam->add_option("--trials", vft)->capture_default_str();
    auto* vLoewy = sub(verify, "loewy", "the Loewy bound on gn = 0 rows");
    vLoewy->add_option("--dmax", dmax)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (capFlag >= 0)
        opt.cap = capFlag;
    if (jmaxFlag >= 0)
        opt.jmax = jmaxFlag;
    opt.threads = threadsFlag;

    try {
        if (construct->parsed()) {
            ConstructOutput out = cOpt->parsed() ? run_construct_optimal(d, c, q, a, opt)
                                                 : run_construct_staircase(ss, hh, ee, opt);
            std::filesystem::create_directories(outDir);
            for (auto& [name, body] : out.files) {
                std::ofstream f(std::filesystem::path(outDir) / name);
                f << body;
            }
            std::ofstream mf(std::filesystem::path(outDir) / "manifest.json");
            mf << out.manifest;
            emit(out.report, of, out.manifest);
            return 0;
        }
        if (series->parsed()) {
            RunReport rep("series");
            std::string human;
            if (sTate->parsed()) {
                RationalSeries s = tate_series(dimR, codimR);
                rep.results()["series"] = s.to_json();
                human = s.to_text() + "\n";
            } else if (sCi->parsed()) {
                RationalSeries s = graded_ci_pk(sciE, sciDegs);
                rep.results()["series"] = s.to_json();
                human = s.to_text() + "\n";
            } else if (sDet->parsed()) {
                BiPoly p = det_power_series(ss, hh, ee);
                RationalSeries s = RationalSeries::polynomial(p);
                rep.results()["series"] = s.to_json();
                human = s.to_text() + "\n";
            } else if (sAdeq->parsed()) {
                RationalSeries s = RationalSeries::polynomial(adequate_ideal_series(ss, hh, ee));
                rep.results()["series"] = s.to_json();
                human = s.to_text() + "\n";
            } else if (sRes->parsed()) {
                RationalSeries s = golod_residue_series(ra, rc, rd, re, poly_from_coeffs(pqjCoeffs));
                auto po = pole_orders(s);
                rep.results()["series"] = s.to_json();
                rep.results()["cx"] = po.first;
                rep.results()["gn"] = po.second;
                human = s.to_text() + "   (cx = " + std::to_string(po.first) +
                        ", gn = " + std::to_string(po.second) + ")\n";
            } else if (sBound->parsed()) {
                int g = granularity_bound(bc, bq);
                rep.results()["bound"] = g;
                human = std::to_string(g) + "\n";
            } else if (sGring->parsed()) {
                int g = gring_granularity(make_gring_params(gc, gd, ge, ga, gh));
                rep.results()["gn"] = g;
                human = std::to_string(g) + "\n";
            } else {
                std::cerr << "series: missing subcommand\n";
                return 2;
            }
            emit(rep, of, human);
            return 0;
        }
        if (hilb->parsed() || resolve->parsed() || compare->parsed()) {
            std::vector<RingSpec> blocks = parse_ring_specs(slurp(file));
            RingSpec ring = pick_ring(blocks, ringName);
            if (ring.p != opt.prime && opt.prime != kDefaultPrime) {
                // --prime re-reduces the file's integer coefficients for
                // multi-prime spot checks of the determinantal cases
                RingSpec reringed(opt.prime, ring.vars, {}, ring.name);
                for (auto& g : ring.gens) {
                    HomogPoly f(opt.prime, g.degree());
                    for (auto& [m, cf] : g.terms())
                        f.add_term(m, cf);
                    reringed.gens.push_back(std::move(f));
                }
                ring = reringed;
            }
            if (hilb->parsed()) {
                int jm = jmaxFlag >= 0 ? jmaxFlag : default_cap(ring);
                RunReport rep = run_hilbert(ring, jm, opt);
                std::ostringstream os;
                os << "H = " << rep.json()["results"]["values"].dump()
                   << "  dim = " << rep.json()["results"]["krullDim"].dump()
                   << "  numerator = " << rep.json()["results"]["numerator"].dump() << "\n";
                emit(rep, of, os.str());
                return 0;
            }
            std::vector<HomogPoly> module = pick_module(blocks, ring, moduleName);
            if (resolve->parsed()) {
                RunReport rep = run_resolve(ring, module, moduleName, opt);
                emit(rep, of, rep.json()["results"]["triangle"].get<std::string>());
                return 0;
            }
            RunReport rep = run_compare(ring, module, moduleName, opt);
            std::string verdict = rep.json()["results"]["verdict"];
            emit(rep, of, "compare: " + verdict + "\n" + rep.json()["results"]["checks"].dump(2) + "\n");
            return verdict == "PASS" ? 0 : 1;
        }
        if (verify->parsed()) {
            RunReport rep = vOpt->parsed()    ? run_verify_optimal(dmax, opt, !noOracle)
                            : vGring->parsed() ? run_verify_gring(vgd, vge, vga, opt)
                            : vMin->parsed()   ? run_verify_minmult(vme, vsamples, opt)
                            : vFam->parsed()   ? run_verify_family(vft, opt)
                                               : run_verify_loewy(dmax, opt);
            emit(rep, of, verdict_table(rep));
            return summarize(rep).all_ok() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonHomogeneous& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
