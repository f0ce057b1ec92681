#ifndef DGS_ERROR_HPP
#define DGS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dgs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonRegularError : Error { using Error::Error; };
struct NotStronglyConnectedError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct NoConvergenceError : Error { using Error::Error; };
struct TrivialMatchError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BadPrimeError : Error { using Error::Error; };
struct UnknownNameError : Error { using Error::Error; };
struct NotSimpleError : Error { using Error::Error; };
struct SingularMatrixError : Error { using Error::Error; };
struct ClosureBudgetError : Error { using Error::Error; };
struct ResidualError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct PeriodicError : Error { using Error::Error; };

}  // namespace dgs

#endif
