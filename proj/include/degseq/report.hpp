#pragma once

#include <string>
#include <vector>

namespace degseq {

// One replayable mismatch: re-running `operation` on `input` reproduces it.
struct FailureEntry {
    std::string operation;
    std::string input;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    enum class Status { pass, fail, incomplete };

    std::string suite;
    std::string parameters;
    std::size_t checked = 0;
    std::vector<FailureEntry> failures;
    double elapsed_ms = 0.0;
    Status status = Status::pass;

    bool passed() const { return status == Status::pass; }
    void add_failure(std::string op, std::string input, std::string expected, std::string got) {
        failures.push_back({std::move(op), std::move(input), std::move(expected), std::move(got)});
        if (status == Status::pass) status = Status::fail;
    }
    void mark_incomplete() { status = Status::incomplete; }
};

const char* status_name(VerificationReport::Status s);

} // namespace degseq
