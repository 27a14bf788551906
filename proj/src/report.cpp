#include "bettilab/report.hpp"

namespace bettilab {

RunReport::RunReport(std::string command)
{
    j_["command"] = std::move(command);
    j_["inputs"] = nlohmann::json::object();
    j_["results"] = nlohmann::json::object();
    j_["timings"] = nlohmann::json::object();
}

void RunReport::start_phase(const std::string& name)
{
    phase_ = name;
    phaseStart_ = std::chrono::steady_clock::now();
}

void RunReport::end_phase()
{
    if (phase_.empty())
        return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - phaseStart_)
                  .count();
    j_["timings"][phase_] = ms;
    phase_.clear();
}

std::string RunReport::deterministic_dump(int indent) const
{
    nlohmann::json copy = j_;
    copy.erase("timings");
    return copy.dump(indent);
}

} // namespace bettilab
