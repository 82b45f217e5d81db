#ifndef NONIC_ERRORS_HPP
#define NONIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nonic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* input a makes x^9 - a reducible (or a in {0, 1, -1}) */
struct ReducibleError : Error {
    using Error::Error;
};

/* factorization budget exhausted, or a cofactor could not be certified prime */
struct FactorBudgetError : Error {
    using Error::Error;
};

/* operation called for a prime case it does not handle */
struct WrongCaseError : Error {
    using Error::Error;
};

/* residual polynomial has repeated factors; first-order index count not valid */
struct RegularityError : Error {
    using Error::Error;
};

/* polygon configuration outside the supported second-order hypotheses */
struct UnsupportedConfigurationError : Error {
    using Error::Error;
};

/* a computed object violates a property it is guaranteed to satisfy */
struct InternalConsistencyError : Error {
    using Error::Error;
};

/* two independent computation paths produced different results */
struct CrossPathError : Error {
    using Error::Error;
};

/* module does not contain Z[theta], or generators do not span full rank */
struct ContainmentError : Error {
    using Error::Error;
};
struct RankError : Error {
    using Error::Error;
};

} // namespace nonic

#endif
