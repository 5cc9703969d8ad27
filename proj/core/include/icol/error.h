#ifndef ICOL_ERROR_H_
#define ICOL_ERROR_H_

#include <stdexcept>
#include <string>

namespace icol {

enum class ErrorKind {
  kParse,
  kLoop,
  kDuplicateEdge,
  kDisconnected,
  kEmptyGraph,
  kOutOfRange,
  kNotTree,
  kEdgeless,
  kPrecondition,
  kSizeLimit,
};

const char* ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception type; `kind()`
// lets callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace icol

#endif  // ICOL_ERROR_H_
