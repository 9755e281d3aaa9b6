#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/errors.hpp"

namespace degseq {

// A degree sequence in canonical non-increasing order. Zero terms are
// allowed; terms may exceed n-1 at construction time (such sequences are
// rejected by the graphicality tests, not by the constructor).
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> terms);

    // Comma-separated integers, e.g. "3,3,2,2,2"; unsorted input is
    // canonicalized. Whitespace around terms is ignored.
    static DegreeSequence parse(std::string_view text);

    int size() const { return static_cast<int>(terms_.size()); }
    int sigma() const { return sigma_; }
    const std::vector<int>& terms() const { return terms_; }

    // 0-based access.
    int term(int i) const { return terms_[static_cast<std::size_t>(i)]; }
    // 1-based access d_k, matching the usual statement of the theorems.
    int d(int k) const { return terms_[static_cast<std::size_t>(k - 1)]; }

    bool all_zero() const;
    int max_term() const { return terms_.empty() ? 0 : terms_.front(); }

    std::string to_string() const;

    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> terms_;
    int sigma_ = 0;
};

// Result of laying off d_k: the residual sequence of length n-1 plus the
// bookkeeping needed to reconstruct which original positions lost a degree.
struct LayoffResult {
    DegreeSequence reduced;
    int k = 0;                            // 1-based index laid off
    int removed_degree = 0;               // d_k
    std::vector<int> decremented_positions;  // original 1-based positions, ascending
};

// Erdos-Gallai test: sigma even and, for every t in 1..n-1,
// sum_{i<=t} d_i <= t(t-1) + sum_{j>t} min(t, d_j).
// Odd sigma returns false; a term >= n or < 0 raises ValidationError.
bool is_graphic_eg(const DegreeSequence& seq);

// Two-case residual sequence: when d_k >= k decrement positions 1..k-1 and
// k+1..d_k+1, when d_k < k decrement positions 1..d_k; drop position k and
// sort. Returns nullopt when a decremented term is already zero (no residual
// sequence exists in NS_{n-1}; the input cannot be graphic).
std::optional<LayoffResult> try_layoff(const DegreeSequence& seq, int k);

// As try_layoff but throws ValidationError when no residual sequence exists.
LayoffResult layoff(const DegreeSequence& seq, int k);

// Recursive graphicality via laying off d_1 until the sequence is all-zero.
// Agrees with is_graphic_eg on every input.
bool is_graphic_layoff(const DegreeSequence& seq);

inline constexpr int kAnyFirstTerm = -1;

struct EnumerationOptions {
    int min_sigma = 0;
    int max_sigma = -1;      // -1 means n(n-1)
    int first_term = kAnyFirstTerm;  // fix d_1 to partition the enumeration
};

// Yields every graphic sequence with n terms in [0, n-1] and even sigma in
// [min_sigma, max_sigma], each exactly once, in descending lexicographic
// order. The callback returns false to stop early.
void enumerate_graphic_sequences(int n, const EnumerationOptions& opts,
                                 const std::function<bool(const DegreeSequence&)>& yield);

std::vector<DegreeSequence> all_graphic_sequences(int n, int min_sigma, int max_sigma);

// Yields every non-increasing sequence with n terms in [0, n-1] (graphic or
// not), descending lexicographic order. Used by the exhaustive suites.
void enumerate_nonincreasing_sequences(int n,
                                       const std::function<bool(const DegreeSequence&)>& yield);

} // namespace degseq
