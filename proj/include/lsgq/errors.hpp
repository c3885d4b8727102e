#ifndef LSGQ_ERRORS_HPP
#define LSGQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lsgq {

// Error hierarchy shared by all modules. The CLI maps these to exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& msg) : Error(msg) {}
};

struct ArgumentOutOfRange : Error {
  explicit ArgumentOutOfRange(const std::string& msg) : Error(msg) {}
};

struct NonPrime : Error {
  explicit NonPrime(const std::string& msg) : Error(msg) {}
};

struct DegreeOutOfRange : Error {
  explicit DegreeOutOfRange(const std::string& msg) : Error(msg) {}
};

struct ZeroElement : Error {
  explicit ZeroElement(const std::string& msg) : Error(msg) {}
};

struct IncompatibleSubfields : Error {
  explicit IncompatibleSubfields(const std::string& msg) : Error(msg) {}
};

struct GoursatViolation : Error {
  explicit GoursatViolation(const std::string& msg) : Error(msg) {}
};

struct NotTransitive : Error {
  explicit NotTransitive(const std::string& msg) : Error(msg) {}
};

struct NotInStabilizer : Error {
  explicit NotInStabilizer(const std::string& msg) : Error(msg) {}
};

struct NotLinear : Error {
  explicit NotLinear(const std::string& msg) : Error(msg) {}
};

struct NotAStabilizer : Error {
  explicit NotAStabilizer(const std::string& msg) : Error(msg) {}
};

struct InvalidPartition : Error {
  explicit InvalidPartition(const std::string& msg) : Error(msg) {}
};

struct AsymmetricConnectionSet : Error {
  explicit AsymmetricConnectionSet(const std::string& msg) : Error(msg) {}
};

struct IdentityInS : Error {
  explicit IdentityInS(const std::string& msg) : Error(msg) {}
};

struct SpecLineMismatch : Error {
  explicit SpecLineMismatch(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace lsgq

#endif
