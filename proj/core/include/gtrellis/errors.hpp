#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtrellis {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class NotAGroup : public Error
{
public:
  using Error::Error;
};

class NotASubgroup : public Error
{
public:
  using Error::Error;
};

class NotNormal : public Error
{
public:
  using Error::Error;
};

class NotNormalStep : public Error
{
public:
  NotNormalStep(std::size_t step, std::string const &what)
    : Error(what), step_(step)
  {}

  std::size_t step() const { return step_; }

private:
  std::size_t step_;
};

class TooLarge : public Error
{
public:
  using Error::Error;
};

class NotHomomorphism : public Error
{
public:
  using Error::Error;
};

class NotSubdirect : public Error
{
public:
  using Error::Error;
};

/// The X chain stopped growing before reaching the branch group. `stable()`
/// holds the member indices of the subgroup it stabilized at.
class NotControllable : public Error
{
public:
  NotControllable(std::vector<std::size_t> stable, std::string const &what)
    : Error(what), stable_(std::move(stable))
  {}

  std::vector<std::size_t> const &stable() const { return stable_; }

private:
  std::vector<std::size_t> stable_;
};

class NotControllableMatrix : public Error
{
public:
  using Error::Error;
};

class IndexOutOfRange : public Error
{
public:
  using Error::Error;
};

class LengthMismatch : public Error
{
public:
  using Error::Error;
};

/// An internal consistency check failed. Signals a bug, never bad input.
class VerificationFailed : public Error
{
public:
  using Error::Error;
};

class NotInX0 : public Error
{
public:
  using Error::Error;
};

class InvalidPath : public Error
{
public:
  using Error::Error;
};

class InitialMismatch : public Error
{
public:
  using Error::Error;
};

class FirstBranchMismatch : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  ParseError(std::size_t line, std::string const &what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line)
  {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace gtrellis
