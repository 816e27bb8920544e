#pragma once

#include <stdexcept>
#include <string>

namespace se3conv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotARotation : public Error { using Error::Error; };
class TriangleViolation : public Error { using Error::Error; };
class IndexOutOfRange : public Error { using Error::Error; };
class ImaginaryResidue : public Error { using Error::Error; };
class BadZernikeIndex : public Error { using Error::Error; };
class ShapeMismatch : public Error { using Error::Error; };
class BandLimitMismatch : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class BlockHeaderMismatch : public Error { using Error::Error; };

// Size mismatches of flat inputs are reported with the same type.
using SizeMismatch = ShapeMismatch;

}  // namespace se3conv
