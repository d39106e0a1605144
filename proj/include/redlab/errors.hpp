#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace redlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A block field value does not fit the width its layout assigns.
struct FieldOverflow : Error {
    using Error::Error;
};

// A value has bits above the top of its block layout.
struct OutOfRange : Error {
    using Error::Error;
};

// An exhaustive-enumeration guard tripped.
struct TooLarge : Error {
    using Error::Error;
};

// A table or node budget was exceeded.
struct ResourceLimit : Error {
    using Error::Error;
};

// A subset-sum target of zero: trivially a yes-instance, resolved by the
// caller before normalization.
struct DegenerateTarget : Error {
    std::size_t instance_index;
    explicit DegenerateTarget(std::size_t idx)
        : Error("instance " + std::to_string(idx) + " has target 0 (trivially yes)"),
          instance_index(idx) {}
};

struct NotASolution : Error {
    using Error::Error;
};

// A solution whose block analysis contradicts the merged-instance invariants;
// indicates an internal bug, not bad user input.
struct MalformedSolution : Error {
    using Error::Error;
};

struct NotAWitness : Error {
    using Error::Error;
};

struct InvalidFamily : Error {
    using Error::Error;
};

struct BadSpec : Error {
    using Error::Error;
};

// The instance is decided before any gadget needs to be built.
struct TrivialInstance : Error {
    bool answer;
    explicit TrivialInstance(bool yes)
        : Error(yes ? "trivially a yes-instance" : "trivially a no-instance"), answer(yes) {}
};

}  // namespace redlab
