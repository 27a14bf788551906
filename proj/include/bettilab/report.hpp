#ifndef BETTILAB_REPORT_HPP
#define BETTILAB_REPORT_HPP

#include <chrono>
#include <json.hpp>
#include <string>

namespace bettilab {

/* Machine-readable run report. Everything except the "timings" object is a
 * pure function of the inputs, so identical invocations serialize to
 * byte-identical JSON once timings are stripped. */
class RunReport {
public:
    explicit RunReport(std::string command);

    nlohmann::json& inputs() { return j_["inputs"]; }
    nlohmann::json& results() { return j_["results"]; }

    void start_phase(const std::string& name);
    void end_phase();

    const nlohmann::json& json() const { return j_; }
    std::string dump(int indent = 2) const { return j_.dump(indent); }
    // the deterministic payload: report without timings
    std::string deterministic_dump(int indent = 2) const;

private:
    nlohmann::json j_;
    std::string phase_;
    std::chrono::steady_clock::time_point phaseStart_;
};

} // namespace bettilab

#endif
