#include "qstab/harness/report.hpp"

#include <sstream>

namespace qstab::harness {

Json TheoremReport::to_json() const {
    Json j;
    j["claim_id"] = claim_id;
    j["backend"] = backend;
    j["seed"] = seed;
    j["samples"] = samples;
    j["failures"] = failures;
    j["vacuous"] = vacuous;
    j["inconclusive"] = inconclusive;
    j["status"] = status;
    j["witnesses"] = Json::array();
    for (const auto& w : witnesses) j["witnesses"].push_back(w);
    j["details"] = details;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string reports_to_csv(const std::vector<TheoremReport>& reports) {
    std::ostringstream os;
    os << "claim_id,backend,seed,samples,failures,inconclusive,vacuous,status,elapsed_ms\n";
    for (const auto& r : reports) {
        os << r.claim_id << ",\"" << r.backend << "\"," << r.seed << ',' << r.samples << ',' << r.failures << ','
           << r.inconclusive << ',' << (r.vacuous ? "true" : "false") << ',' << r.status << ',' << r.elapsed_ms
           << '\n';
    }
    return os.str();
}

Rng check_rng(const std::string& claim_id, std::uint64_t seed) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : claim_id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return Rng(h ^ (seed * 0x9E3779B97F4A7C15ULL));
}

}  // namespace qstab::harness
