#pragma once

#include <stdexcept>
#include <string>

namespace circlemap {

// Base for everything this library throws on bad input or degenerate data.
class CircleMapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A point of the domain violates a precondition (|z| >= 1, zero outside the
// admissible disk, malformed sample grid, ...).
class DomainError : public CircleMapError {
public:
    using CircleMapError::CircleMapError;
};

// Evaluation point is too close to a pole 1/conj(z_k) of a Blaschke factor.
class PoleProximityError : public CircleMapError {
public:
    using CircleMapError::CircleMapError;
};

// Zeros handed to an aligned-zeros check do not share one argument.
class AlignmentError : public CircleMapError {
public:
    using CircleMapError::CircleMapError;
};

// Samples expected on the unit circle are not unimodular within tolerance.
class NotUnimodularError : public CircleMapError {
public:
    using CircleMapError::CircleMapError;
};

// Star center coincides with a point of the sampled curve.
class CenterOnCurveError : public CircleMapError {
public:
    using CircleMapError::CircleMapError;
};

// A grid point of the unit circle is (numerically) a pole of h - w0.
class PoleOnCircleError : public CircleMapError {
public:
    using CircleMapError::CircleMapError;
};

// The antipodal balance function never changes sign on the sampled grid.
class NoSignChangeError : public CircleMapError {
public:
    using CircleMapError::CircleMapError;
};

// Requested coefficient window does not fit the sample resolution.
class WindowTooWideError : public CircleMapError {
public:
    using CircleMapError::CircleMapError;
};

// Input document (map description, curve table) failed to parse.
class ParseError : public CircleMapError {
public:
    using CircleMapError::CircleMapError;
};

} // namespace circlemap
