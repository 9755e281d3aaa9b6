#include "degseq/report.hpp"

namespace degseq {

const char* status_name(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::pass: return "pass";
        case VerificationReport::Status::fail: return "fail";
        case VerificationReport::Status::incomplete: return "incomplete";
    }
    return "?";
}

} // namespace degseq
