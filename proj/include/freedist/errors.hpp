#ifndef FREEDIST_ERRORS_HPP
#define FREEDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace freedist {

/// Base class of all library errors. Subclasses distinguish precondition
/// violations (bad inputs) from internal failures so the CLI can map them
/// to distinct exit codes.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- input / precondition errors -------------------------------------------

class NonPrimeCharacteristic : public Error {
   public:
    using Error::Error;
};

class ReducibleModulus : public Error {
   public:
    using Error::Error;
};

class MissingModulus : public Error {
   public:
    using Error::Error;
};

class UnsupportedField : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

class ZeroRow : public Error {
   public:
    using Error::Error;
};

class RankDeficient : public Error {
   public:
    using Error::Error;
};

class NotRowReduced : public Error {
   public:
    using Error::Error;
};

class Catastrophic : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

class BadBound : public Error {
   public:
    using Error::Error;
};

class StateSpaceTooLarge : public Error {
   public:
    using Error::Error;
};

class UnsupportedRate : public Error {
   public:
    using Error::Error;
};

class MalformedDiagram : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

// --- internal errors ---------------------------------------------------------

/// A correct engine disagreed with the oracle during a benchmark run.
/// Treated as a build-breaking bug, never silently ignored.
class MismatchedDistance : public Error {
   public:
    using Error::Error;
};

/// A search exceeded its configured step ceiling (suspected non-termination).
class StepLimitExceeded : public Error {
   public:
    using Error::Error;
};

}  // namespace freedist

#endif
