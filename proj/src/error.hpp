#ifndef ENTROEDGE_ERROR_HPP
#define ENTROEDGE_ERROR_HPP

#include <stdexcept>

namespace entroedge {

// Base type for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A file or stream could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

// Input bytes do not form a well-formed image file.
class ParseError : public Error {
public:
    using Error::Error;
};

// The input carries too little structure for the requested analysis,
// e.g. a histogram with a single gray level cannot be thresholded.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

// A caller-supplied value violates a documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace entroedge

#endif
