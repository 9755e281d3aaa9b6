#include "degseq/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    for (int t : terms_) {
        if (t < 0) throw ValidationError("degree sequence term is negative");
    }
    std::sort(terms_.begin(), terms_.end(), std::greater<int>());
    sigma_ = std::accumulate(terms_.begin(), terms_.end(), 0);
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
    std::vector<int> terms;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        std::size_t b = tok.find_first_not_of(" \t");
        std::size_t e = tok.find_last_not_of(" \t");
        if (b == std::string_view::npos) throw ValidationError("empty term in sequence text");
        tok = tok.substr(b, e - b + 1);
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw ValidationError("bad degree term '" + std::string(tok) + "'");
        terms.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return DegreeSequence(std::move(terms));
}

bool DegreeSequence::all_zero() const {
    return terms_.empty() || terms_.front() == 0;
}

std::string DegreeSequence::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out << ',';
        out << terms_[i];
    }
    return out.str();
}

namespace {

void check_terms_in_range(const DegreeSequence& seq) {
    if (seq.size() > 0 && seq.max_term() >= seq.size())
        throw ValidationError("term " + std::to_string(seq.max_term()) +
                              " exceeds n-1 = " + std::to_string(seq.size() - 1));
}

} // namespace

bool is_graphic_eg(const DegreeSequence& seq) {
    check_terms_in_range(seq);
    if (seq.sigma() % 2 != 0) return false;
    const int n = seq.size();
    long long prefix = 0;
    for (int t = 1; t <= n - 1; ++t) {
        prefix += seq.d(t);
        long long rhs = static_cast<long long>(t) * (t - 1);
        for (int j = t + 1; j <= n; ++j) rhs += std::min(t, seq.d(j));
        if (prefix > rhs) return false;
    }
    return true;
}

std::optional<LayoffResult> try_layoff(const DegreeSequence& seq, int k) {
    const int n = seq.size();
    if (k < 1 || k > n) throw ValidationError("layoff index out of range");
    if (n == 1 && seq.d(1) > 0) throw ValidationError("cannot lay off: single positive term");
    check_terms_in_range(seq);

    const int dk = seq.d(k);
    LayoffResult result;
    result.k = k;
    result.removed_degree = dk;

    std::vector<int> reduced;
    reduced.reserve(static_cast<std::size_t>(n) - 1);
    auto decremented = [&](int pos) {  // 1-based position of the canonical input
        if (dk >= k) return pos != k && pos <= dk + 1;
        return pos <= dk;
    };
    for (int pos = 1; pos <= n; ++pos) {
        if (pos == k) continue;
        int value = seq.d(pos);
        if (decremented(pos)) {
            if (value == 0) return std::nullopt;
            --value;
            result.decremented_positions.push_back(pos);
        }
        reduced.push_back(value);
    }
    result.reduced = DegreeSequence(std::move(reduced));
    return result;
}

LayoffResult layoff(const DegreeSequence& seq, int k) {
    auto result = try_layoff(seq, k);
    if (!result)
        throw ValidationError("laying off d_" + std::to_string(k) +
                              " would decrement a zero term");
    return std::move(*result);
}

bool is_graphic_layoff(const DegreeSequence& seq) {
    check_terms_in_range(seq);
    DegreeSequence current = seq;
    // Laying off d_1 keeps every term below the new length, so the recursion
    // never re-validates ranges.
    while (!current.all_zero()) {
        auto next = try_layoff(current, 1);
        if (!next) return false;
        current = std::move(next->reduced);
    }
    return true;
}

namespace {

struct Enumerator {
    int n;
    int min_sigma;
    int max_sigma;
    int first_term;
    const std::function<bool(const DegreeSequence&)>* yield;
    std::vector<int> prefix;
    bool stopped = false;

    // Erdos-Gallai check of the finished prefix against the most generous
    // completion (all remaining terms equal to the current minimum).
    bool prefix_feasible(int sum) const {
        const int i = static_cast<int>(prefix.size());
        const int tail = n - i;
        const int last = prefix.empty() ? n - 1 : prefix.back();
        if (sum + tail * last < min_sigma) return false;
        if (sum > max_sigma) return false;
        long long lead = 0;
        for (int t = 1; t <= i; ++t) {
            lead += prefix[static_cast<std::size_t>(t) - 1];
            long long rhs = static_cast<long long>(t) * (t - 1);
            for (int j = t; j < i; ++j) rhs += std::min(t, prefix[static_cast<std::size_t>(j)]);
            rhs += static_cast<long long>(tail) * std::min(t, last);
            if (lead > rhs) return false;
        }
        return true;
    }

    void recurse(int sum) {
        if (stopped) return;
        const int i = static_cast<int>(prefix.size());
        if (i == n) {
            if (sum < min_sigma || sum % 2 != 0) return;
            DegreeSequence seq(prefix);
            if (!is_graphic_eg(seq)) return;
            if (!(*yield)(seq)) stopped = true;
            return;
        }
        int hi = i == 0 ? n - 1 : prefix.back();
        int lo = 0;
        if (i == 0 && first_term != kAnyFirstTerm) hi = lo = first_term;
        for (int v = hi; v >= lo; --v) {
            prefix.push_back(v);
            if (prefix_feasible(sum + v)) recurse(sum + v);
            prefix.pop_back();
            if (stopped) return;
        }
    }
};

} // namespace

void enumerate_graphic_sequences(int n, const EnumerationOptions& opts,
                                 const std::function<bool(const DegreeSequence&)>& yield) {
    if (n < 1) throw ValidationError("enumeration requires n >= 1");
    const int top = n * (n - 1);
    int max_sigma = opts.max_sigma < 0 ? top : opts.max_sigma;
    if (opts.min_sigma < 0 || opts.min_sigma > max_sigma || max_sigma > top)
        throw ValidationError("bad sigma window");
    if (opts.first_term != kAnyFirstTerm && (opts.first_term < 0 || opts.first_term > n - 1))
        throw ValidationError("first_term out of range");
    Enumerator e{n, opts.min_sigma, max_sigma, opts.first_term, &yield, {}, false};
    e.prefix.reserve(static_cast<std::size_t>(n));
    e.recurse(0);
}

std::vector<DegreeSequence> all_graphic_sequences(int n, int min_sigma, int max_sigma) {
    std::vector<DegreeSequence> out;
    EnumerationOptions opts;
    opts.min_sigma = min_sigma;
    opts.max_sigma = max_sigma;
    enumerate_graphic_sequences(n, opts, [&](const DegreeSequence& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

void enumerate_nonincreasing_sequences(int n,
                                       const std::function<bool(const DegreeSequence&)>& yield) {
    if (n < 1) throw ValidationError("enumeration requires n >= 1");
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    bool stopped = false;
    auto recurse = [&](auto&& self) -> void {
        if (stopped) return;
        if (static_cast<int>(prefix.size()) == n) {
            if (!yield(DegreeSequence(prefix))) stopped = true;
            return;
        }
        int hi = prefix.empty() ? n - 1 : prefix.back();
        for (int v = hi; v >= 0 && !stopped; --v) {
            prefix.push_back(v);
            self(self);
            prefix.pop_back();
        }
    };
    recurse(recurse);
}

} // namespace degseq
