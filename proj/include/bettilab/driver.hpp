#ifndef BETTILAB_DRIVER_HPP
#define BETTILAB_DRIVER_HPP

#include "bettilab/report.hpp"
#include "bettilab/ring_spec.hpp"

#include <optional>

namespace bettilab {

/* Shared options plumbed from the CLI flags. threads = 0 means use the
 * BETTILAB_THREADS environment variable, else the hardware count. */
struct DriverOptions {
    uint32_t prime = kDefaultPrime;
    uint64_t seed = 1;
    int imax = 10;
    std::optional<int> jmax;
    int trials = 5;
    std::optional<int> cap;
    int threads = 0;
};

int resolved_thread_count(int requested);

struct VerifySummary {
    int pass = 0;
    int passStar = 0; // rows that pass while resting on a Heuristic value
    int fail = 0;
    bool all_ok() const { return fail == 0; }
};

VerifySummary summarize(const RunReport& rep);

RunReport run_hilbert(const RingSpec& ring, int jmax, const DriverOptions& opt);
RunReport run_resolve(const RingSpec& ring, const std::vector<HomogPoly>& moduleGens,
                      const std::string& moduleName, const DriverOptions& opt);
RunReport run_compare(const RingSpec& ring, const std::vector<HomogPoly>& moduleGens,
                      const std::string& moduleName, const DriverOptions& opt);

RunReport run_verify_optimal(int dmax, const DriverOptions& opt, bool withOracle = true);
RunReport run_verify_gring(int dmax, int emax, int amax, const DriverOptions& opt);
RunReport run_verify_minmult(int emax, int samples, const DriverOptions& opt);
RunReport run_verify_family(int trials, const DriverOptions& opt);
RunReport run_verify_loewy(int dmax, const DriverOptions& opt);

struct ConstructOutput {
    RunReport report;
    // name -> file body, ready to be written next to the manifest
    std::vector<std::pair<std::string, std::string>> files;
    std::string manifest;
};
ConstructOutput run_construct_optimal(int d, int c, int q, int a, const DriverOptions& opt);
ConstructOutput run_construct_staircase(int s, int h, int e, const DriverOptions& opt);

// human-readable verdict table from a verify report
std::string verdict_table(const RunReport& rep);
std::string verdict_csv(const RunReport& rep);

} // namespace bettilab

#endif
