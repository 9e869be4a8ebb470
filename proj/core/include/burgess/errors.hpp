#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burgess {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ff_core
class NotPrime : public Error { public: using Error::Error; };
class OrderNotDividing : public Error { public: using Error::Error; };
class OrderOne : public Error { public: using Error::Error; };

// polynomials and systems
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};
class VariableOutOfRange : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class OverflowError : public Error { public: using Error::Error; };
class DegenerateSystem : public Error { public: using Error::Error; };
class DegreeTooLarge : public Error { public: using Error::Error; };
class ZeroPolynomial : public Error { public: using Error::Error; };
class ZeroModQ : public Error { public: using Error::Error; };
class NotTDI : public Error { public: using Error::Error; };

// enumeration
class BudgetExceeded : public Error { public: using Error::Error; };

// charsums
class IdentityViolation : public Error { public: using Error::Error; };
class UnsortedSides : public Error { public: using Error::Error; };
class InequalityViolation : public Error { public: using Error::Error; };

// vinogradov
class UnsupportedSystem : public Error { public: using Error::Error; };

// burgess_calc
class DimensionTooSmall : public Error { public: using Error::Error; };
class InvalidRange : public Error { public: using Error::Error; };
class EmptyWindow : public Error { public: using Error::Error; };
class KappaTooLarge : public Error { public: using Error::Error; };
class HypothesisViolated : public Error { public: using Error::Error; };

}  // namespace burgess
