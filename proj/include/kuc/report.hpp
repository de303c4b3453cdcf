#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kuc {

struct Witness {
    std::string expr;
    std::string value;
    unsigned long precision_bits = 0;
};

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus s);

/// One verified claim: stable id, human-readable statement of what was
/// checked, outcome, and the witness values that decided it.
struct CheckReport {
    std::string claim_id;
    std::string anchor;
    CheckStatus status = CheckStatus::pass;
    std::vector<Witness> witnesses;
    std::optional<std::uint64_t> seed;
    unsigned long precision_bits = 0;

    CheckReport() = default;
    CheckReport(std::string id, std::string desc) : claim_id(std::move(id)), anchor(std::move(desc)) {}

    void note(std::string expr, std::string value, unsigned long bits = 0) {
        witnesses.push_back({std::move(expr), std::move(value), bits});
    }
    /// Record a predicate result; any failure flips the report to fail.
    void require(bool ok, std::string expr, std::string value, unsigned long bits = 0) {
        witnesses.push_back({std::move(expr), (ok ? "ok: " : "VIOLATED: ") + value, bits});
        if (!ok) status = CheckStatus::fail;
    }
    void mark_inconclusive() {
        if (status == CheckStatus::pass) status = CheckStatus::inconclusive;
    }
    bool passed() const { return status == CheckStatus::pass; }
};

std::string render_text(const CheckReport& r);

}  // namespace kuc
