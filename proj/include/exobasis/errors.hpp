#pragma once

#include <stdexcept>
#include <string>

namespace exobasis {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };

struct MalformedBox : Error { using Error::Error; };

struct KExceedsN : Error { using Error::Error; };
struct DuplicateResidue : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct ClassTooLarge : Error { using Error::Error; };

struct CertificateInvalid : Error { using Error::Error; };
struct NotEnoughResidues : Error { using Error::Error; };
struct Unachievable : Error { using Error::Error; };
struct GeneratorInconsistent : Error { using Error::Error; };

struct EmptyPoly : Error { using Error::Error; };
struct WindowEmpty : Error { using Error::Error; };

struct KroneckerSearchFailed : Error {
    explicit KroneckerSearchFailed(int j_, const std::string& msg) : Error(msg), j(j_) {}
    int j;
};

/// Malformed input document (JSON with position info, bad flag values).
struct InputError : Error { using Error::Error; };

} // namespace exobasis
