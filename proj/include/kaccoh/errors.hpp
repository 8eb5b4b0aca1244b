#pragma once

#include <stdexcept>
#include <string>

namespace kaccoh {

// Base for all library errors. `code()` is a stable machine-readable tag;
// the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define KACCOH_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

KACCOH_DEFINE_ERROR(NotAssociative);
KACCOH_DEFINE_ERROR(NoIdentity);
KACCOH_DEFINE_ERROR(NotBijectiveRow);
KACCOH_DEFINE_ERROR(NotAPermutation);
KACCOH_DEFINE_ERROR(OrderLimitExceeded);
KACCOH_DEFINE_ERROR(NotASubgroup);
KACCOH_DEFINE_ERROR(IntersectionNotTrivial);
KACCOH_DEFINE_ERROR(NotExactFactorization);
KACCOH_DEFINE_ERROR(FaceIndexOutOfRange);
KACCOH_DEFINE_ERROR(RankOutOfRange);
KACCOH_DEFINE_ERROR(BudgetExceeded);
KACCOH_DEFINE_ERROR(DegreeUnavailable);
KACCOH_DEFINE_ERROR(NotAChainMap);
KACCOH_DEFINE_ERROR(NotACocycle);
KACCOH_DEFINE_ERROR(NotBijective);
KACCOH_DEFINE_ERROR(ShapeMismatch);
KACCOH_DEFINE_ERROR(SchemaError);
KACCOH_DEFINE_ERROR(ArithmeticOverflow);
KACCOH_DEFINE_ERROR(IndexError);

#undef KACCOH_DEFINE_ERROR

}  // namespace kaccoh
