#ifndef MGLAB_ERRORS_HPP
#define MGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mglab {

/// Bad input: malformed files, out-of-range parameters, broken invariants.
/// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact computation would exceed a configured enumeration cap.
/// The CLI maps this to exit code 2.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some group's in-group examples contradict every hypothesis in the class,
/// i.e. the data is not group-realizable.
class NoConsistentHypothesisError : public ValidationError {
 public:
  explicit NoConsistentHypothesisError(const std::string& group_id)
      : ValidationError("no hypothesis consistent with the in-group examples of group '" +
                        group_id + "'"),
        group_id_(group_id) {}

  const std::string& group_id() const { return group_id_; }

 private:
  std::string group_id_;
};

/// A learning or exact-evaluation operation was handed an instance whose
/// labels are probabilistic (no deterministic target concept exists).
class NonRealizableFixtureError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace mglab

#endif  // MGLAB_ERRORS_HPP
