#pragma once

#include <stdexcept>
#include <string>

namespace flagdual
{

/** @brief Base class of every error raised by the library */
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/** Coincident points, vanishing pairings or determinants. */
class DegenerateInput : public Error
{
public:
    using Error::Error;
};

class SingularMatrix : public Error
{
public:
    using Error::Error;
};

/** A coordinate took a forbidden value (0 or 1). */
class OutOfDomain : public Error
{
public:
    using Error::Error;
};

/** A face coordinate equals -1, so the configuration is not very generic. */
class NotVeryGeneric : public Error
{
public:
    using Error::Error;
};

class NotOnSphere : public Error
{
public:
    using Error::Error;
};

/** The birational map from w-coordinates is undefined at this point. */
class WSingular : public Error
{
public:
    using Error::Error;
};

/** Operation not available for this scalar backend. */
class Unsupported : public Error
{
public:
    using Error::Error;
};

class MalformedPairing : public Error
{
public:
    using Error::Error;
};

/** Redundant tetrahedron coordinates violate the vertex or face relations. */
class InconsistentCoords : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

/** @brief Newton iteration failed; carries the final residual */
class SolverDiverged : public Error
{
public:
    SolverDiverged(const std::string& msg, double residual)
        : Error(msg), residual_{residual}
    {
    }
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/** A coordinate came within the exclusion radius of 0 or 1. */
class LeftDomain : public Error
{
public:
    using Error::Error;
};

}  // namespace flagdual
