#pragma once

#include <stdexcept>
#include <string>

namespace gme {

//- Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

//- Malformed external input: files, config documents, command lines.
class InputError : public Error {
 public:
  using Error::Error;
};

//- Precondition violations on API arguments. The CLI maps these to the
//- same exit code as InputError since they originate from caller data.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class UnknownStateError : public Error {
 public:
  using Error::Error;
};

class PartitionError : public Error {
 public:
  using Error::Error;
};

class UnitaryError : public Error {
 public:
  using Error::Error;
};

class IsometryError : public Error {
 public:
  using Error::Error;
};

//- A mixed-state evaluation strategy was requested for a measure kind
//- that does not support it (e.g. a direct tangle on a mixed state).
class StrategyError : public Error {
 public:
  using Error::Error;
};

//- Violations of numerical contracts the library checks at runtime.
//- These signal that a mathematical hypothesis failed on concrete data
//- (worth investigating), not that the input was malformed.
class ContractError : public Error {
 public:
  using Error::Error;
};

//- Three lengths that do not satisfy the triangle relation.
class NotATriangle : public ContractError {
 public:
  using ContractError::ContractError;
};

//- A tetrahedron face whose three edges violate their triangle relation.
class FaceInequalityViolation : public ContractError {
 public:
  using ContractError::ContractError;
};

//- The saturation exponent does not exist for the given edge lengths
//- (largest edge positive while another edge is exactly zero).
class InfeasibleError : public ContractError {
 public:
  using ContractError::ContractError;
};

//- The saturation exponent is unconstrained for the given edge lengths
//- (the relation holds for every positive exponent).
class NotApplicableError : public ContractError {
 public:
  using ContractError::ContractError;
};

}  // namespace gme
