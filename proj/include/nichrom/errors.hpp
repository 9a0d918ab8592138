#pragma once

#include <stdexcept>
#include <string>

namespace nichrom {

/// Malformed graph input: loops, duplicate edges, out-of-range ids.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The cactus re-attachment found no colour that keeps the coloring valid.
class ConstructionGap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bound that is proved by direct counting was violated by ground truth.
/// Always a bug in this code base, never an audit finding.
class SoundnessViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace nichrom
