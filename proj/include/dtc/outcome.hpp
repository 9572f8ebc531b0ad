#pragma once

#include <utility>

#include "dtc/sequence.hpp"

namespace dtc {

enum class DecodeStatus {
    ok,
    no_solution,
    ambiguous,
    bch_failure,
    invalid_input,
};

const char* to_string(DecodeStatus s);

// Outcome of a unique decoder: either a codeword or a typed failure.
struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::invalid_input;
    BitString word;

    bool ok() const { return status == DecodeStatus::ok; }

    static DecodeOutcome success(BitString w) {
        return DecodeOutcome{DecodeStatus::ok, std::move(w)};
    }
    static DecodeOutcome fail(DecodeStatus s) { return DecodeOutcome{s, {}}; }
};

}  // namespace dtc
