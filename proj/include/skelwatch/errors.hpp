// Copyright 2026 The skelwatch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKELWATCH_ERRORS_HPP
#define SKELWATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skelwatch {

/// Base class for all error conditions raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// File / format errors (frame_io).
class MissingFile : public Error { public: using Error::Error; };
class MalformedHeader : public Error { public: using Error::Error; };
class TruncatedPixelData : public Error { public: using Error::Error; };
class UnsupportedMaxval : public Error { public: using Error::Error; };
class IoFailure : public Error { public: using Error::Error; };
class EmptySequence : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };

// Raster content errors.
class EmptyMask : public Error { public: using Error::Error; };
class EmptySkeleton : public Error { public: using Error::Error; };
class ZeroWidthBox : public Error { public: using Error::Error; };

// Tracking / generation errors.
class NonFiniteInput : public Error { public: using Error::Error; };
class SilhouetteOutOfBounds : public Error { public: using Error::Error; };

// Configuration errors (bad key, bad value, violated invariant).
class ConfigError : public Error { public: using Error::Error; };

} // namespace skelwatch

#endif // SKELWATCH_ERRORS_HPP
