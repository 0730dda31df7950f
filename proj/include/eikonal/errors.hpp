#pragma once

#include <stdexcept>
#include <string>

namespace eikonal {

// Base of every library error. Numerical failures and input failures are kept
// apart so the CLI can map them to different exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class SchemaError : public InputError {
public:
    using InputError::InputError;
};

class ValidationError : public InputError {
public:
    ValidationError(std::string path, const std::string& what)
        : InputError(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class IndexError : public InputError {
public:
    using InputError::InputError;
};

class IoError : public Error {
public:
    using Error::Error;
};

class PoleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class BranchError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularPointError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class FocalSingularity : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ForwardSingularity : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class GammaPole : public PoleError {
public:
    using PoleError::PoleError;
};

class CutCollision : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class RegulatorFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace eikonal
