#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qaff/classification.hpp"

namespace qaff {

struct CheckParams {
    std::vector<int> ns{2};
    std::vector<int> ells{1, 2};
    std::string backend = "symbolic";
    std::uint64_t seed = 1;
    // Run checks whose statement needs l <= n outside that range as well.
    bool allow_large_ell = false;
    // Used by the segment checks instead of their built-in lists.
    std::optional<SegmentList> segments;
};

struct CheckItem {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::string id;
    std::string title;
    std::vector<CheckItem> items;
    // Backend-independent facts (dimensions, degrees, flags, rendered polynomials).
    nlohmann::json data = nlohmann::json::object();

    bool pass() const;
    nlohmann::json to_json() const;
    std::string text() const;
};

// Registered ids in report order; "all" is accepted by run_checks.
const std::vector<std::string>& check_ids();

CheckReport run_check(const std::string& id, const CheckParams& p);
// "all" expands to every id; independent checks run concurrently, results keep registry order.
std::vector<CheckReport> run_checks(const std::string& id, const CheckParams& p);

// Random nonzero rationals num/den with 1 <= num, den <= 12.
std::vector<Scalar> random_parameters(std::uint64_t seed, int count);

}  // namespace qaff
