#pragma once

#include <stdexcept>
#include <string>

namespace wetpaper {

/// Base of every failure the codec reports as a domain condition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  BadMagic,
  BadDimensions,
  Truncated,
  BadSample,
};

const char* to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : Error(std::string("pbm: ") + to_string(kind) + ": " + what), kind_(kind) {}

  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// The image holds fewer pixels than one embedding area.
class ImageTooSmall : public Error {
 public:
  using Error::Error;
};

/// The message does not fit into the image's capacity.
class MessageTooLong : public Error {
 public:
  using Error::Error;
};

/// Some area cannot carry even its length header.
class HeaderCapacity : public Error {
 public:
  using Error::Error;
};

}  // namespace wetpaper
