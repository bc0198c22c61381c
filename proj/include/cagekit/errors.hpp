#pragma once

#include <stdexcept>
#include <string>

namespace cagekit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// field
class DivisionByZero : public Error { public: using Error::Error; };
class NotInvertible : public Error { public: using Error::Error; };
/// The supplied minimal polynomial shares a factor with an element: it was not irreducible.
class ReducibleModulus : public Error { public: using Error::Error; };
class FieldMismatch : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

// linear algebra / polynomials
class ShapeError : public Error { public: using Error::Error; };
class InvalidPoint : public Error { public: using Error::Error; };
class EmptyProduct : public Error { public: using Error::Error; };
class DegreeOverflow : public Error { public: using Error::Error; };

// cages
class MustValidate : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };
class NotInGeneralPosition : public Error { public: using Error::Error; };
class MaxAttemptsExceeded : public Error { public: using Error::Error; };
class SingularTransform : public Error { public: using Error::Error; };
class DegeneratePencil : public Error { public: using Error::Error; };

// verification / inscription
class DuplicatePoint : public Error { public: using Error::Error; };
class PreconditionError : public Error { public: using Error::Error; };
class DegenerateVariety : public Error { public: using Error::Error; };
class NothingToInscribe : public Error { public: using Error::Error; };
/// Jacobian rank dropped at a node. Cannot happen on a valid cage.
class SingularNode : public Error { public: using Error::Error; };
class InvalidConfiguration : public Error { public: using Error::Error; };

// I/O
class SchemaError : public Error { public: using Error::Error; };
class LookupError : public Error { public: using Error::Error; };

}  // namespace cagekit
