#pragma once

#include <stdexcept>
#include <string>

namespace gst {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Triangle inequality violated / collinear vertices.
class DegenerateTriangle : public Error {
public:
    using Error::Error;
};

// Parameters outside the parameter region of the requested family.
class FamilyDomainViolation : public Error {
public:
    using Error::Error;
};

class SingularMap : public Error {
public:
    using Error::Error;
};

// A construction identity that must hold did not (message carries the
// violated identity and the residual).
class ConsistencyFailure : public Error {
public:
    using Error::Error;
};

// Moran objective has no sign change on the search bracket.
class BracketFailure : public Error {
public:
    using Error::Error;
};

// Finite-difference stencil leaves the family domain.
class DomainEdge : public Error {
public:
    using Error::Error;
};

class DepthCap : public Error {
public:
    using Error::Error;
};

class EmptySet : public Error {
public:
    using Error::Error;
};

class BadViewport : public Error {
public:
    using Error::Error;
};

class IOFailure : public Error {
public:
    using Error::Error;
};

class WordLengthMismatch : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

} // namespace gst
