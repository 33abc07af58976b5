#pragma once

#include <stdexcept>
#include <string>

namespace p1b {

// Base class for every failure this library reports deliberately.
// Anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inverting a truncated power series whose constant term vanishes.
class ZeroConstantTerm : public Error {
public:
    explicit ZeroConstantTerm(const std::string& msg) : Error(msg) {}
};

// A 2x2 parameter matrix with zero determinant where GL2 was required.
class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

// Mixing truncated polynomials with different bounds, or a homogeneous
// y-degree that does not match the expected one.
class DegreeMismatch : public Error {
public:
    explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

// Operation defined only for bundles over a Hirzebruch surface was asked
// of something else.
class NotOverHirzebruch : public Error {
public:
    explicit NotOverHirzebruch(const std::string& msg) : Error(msg) {}
};

// Descriptor family outside the operation's domain.
class UnsupportedFamily : public Error {
public:
    explicit UnsupportedFamily(const std::string& msg) : Error(msg) {}
};

// Integer invariants outside the valid range for the requested family
// or operation.
class RangeViolation : public Error {
public:
    explicit RangeViolation(const std::string& msg) : Error(msg) {}
};

// A matrix over the Laurent ring with vanishing determinant.
class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

// Determinant is not a unit times a power of y where the factorization
// machinery requires it.
class NonUnitDeterminant : public Error {
public:
    explicit NonUnitDeterminant(const std::string& msg) : Error(msg) {}
};

// Specialized matrix could not be brought to diagonal monomial shape at
// the requested parameter value.
class NotNormalizedAtLambda : public Error {
public:
    explicit NotNormalizedAtLambda(const std::string& msg) : Error(msg) {}
};

// Jump locations exist outside the rationals (or could not be certified);
// the message lists the offending polynomial factors.
class UnresolvedJump : public Error {
public:
    explicit UnresolvedJump(const std::string& msg) : Error(msg) {}
};

// A group generator outside the subgroup that acts on the given data.
class IllegalGenerator : public Error {
public:
    explicit IllegalGenerator(const std::string& msg) : Error(msg) {}
};

// Integer data that does not define an Umemura bundle.
class InvalidUmemura : public Error {
public:
    explicit InvalidUmemura(const std::string& msg) : Error(msg) {}
};

// Descriptor that cannot be processed at all (e.g. an unrecognized raw
// class handed to the reducer).
class InvalidDescriptor : public Error {
public:
    explicit InvalidDescriptor(const std::string& msg) : Error(msg) {}
};

} // namespace p1b
