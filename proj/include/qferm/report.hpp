#pragma once

// Outcome record shared by all identity checkers.

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qferm/quiver.hpp"

namespace qferm {

enum class CheckStatus { verified, mismatch, error };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::verified: return "verified";
        case CheckStatus::mismatch: return "mismatch";
        default: return "error";
    }
}

struct Mismatch {
    std::vector<int> alpha;
    std::string lhs, rhs;
};

struct VerificationReport {
    std::string identity;
    std::uint64_t quiver_hash = 0;
    std::vector<int> nu;   // empty when not applicable
    std::vector<int> box;  // empty when not applicable
    std::vector<std::pair<std::string, long long>> extra;
    CheckStatus status = CheckStatus::verified;
    std::vector<Mismatch> mismatches;
    long long ms = 0;

    bool ok() const { return status == CheckStatus::verified; }
    void add_mismatch(std::vector<int> alpha, std::string lhs, std::string rhs) {
        mismatches.push_back({std::move(alpha), std::move(lhs), std::move(rhs)});
        status = CheckStatus::mismatch;
    }
};

namespace detail {

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

inline VerificationReport report_for(const char* identity, const RootData& rd,
                                     std::vector<int> nu, std::vector<int> box) {
    VerificationReport r;
    r.identity = identity;
    r.quiver_hash = rd.quiver().hash();
    r.nu = std::move(nu);
    r.box = std::move(box);
    return r;
}

}  // namespace detail

}  // namespace qferm
