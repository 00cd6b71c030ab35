#pragma once

#include <stdexcept>
#include <string>

namespace qh {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class OffsetMismatchError : public Error {
public:
    explicit OffsetMismatchError(const std::string& what) : Error(what) {}
};

class LevelError : public Error {
public:
    explicit LevelError(const std::string& what) : Error(what) {}
};

class EvenOrderError : public Error {
public:
    explicit EvenOrderError(const std::string& what) : Error(what) {}
};

class OracleError : public Error {
public:
    explicit OracleError(const std::string& what) : Error(what) {}
};

class RewriteError : public Error {
public:
    explicit RewriteError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

class LevelMismatchError : public Error {
public:
    explicit LevelMismatchError(const std::string& what) : Error(what) {}
};

} // namespace qh
