#pragma once

#include <stdexcept>
#include <string>

namespace gvk {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// curve_lattice
class NotDivisible : public Error { public: using Error::Error; };
class RankMismatch : public Error { public: using Error::Error; };

// novikov
class TruncationMismatch : public Error { public: using Error::Error; };
class OutOfTruncation : public Error { public: using Error::Error; };

// char_ring
class PoleAtOne : public Error { public: using Error::Error; };
class DegreeMismatch : public Error { public: using Error::Error; };
class NoIntegralLift : public Error { public: using Error::Error; };
class SingularPairing : public Error { public: using Error::Error; };

// transforms
class NotDivisorClosed : public Error { public: using Error::Error; };
class KindMismatch : public Error { public: using Error::Error; };
class UnsupportedN : public Error { public: using Error::Error; };
class DegreeHypothesisViolated : public Error { public: using Error::Error; };
// A divisor chain whose members disagree about the Calabi-Yau branch
// (canonical degree zero vs negative); transforms would be inconsistent.
class BranchMismatch : public Error { public: using Error::Error; };

// workspace I/O
class ParseError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

}  // namespace gvk
