// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include "spinsim/circuit.hpp"

namespace spinsim::qasm {

/// Emits OpenQASM 2.0 text: version header, one qreg/creg of the circuit
/// size, one statement per gate (id/x/sx/rz/u3/cx) in order, and optionally a
/// terminal measure per qubit. Angles print with 17 significant digits so
/// emitted values parse back bit-exactly. LF line endings; deterministic.
std::string emit(const Circuit& c, bool measure_all);

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& message);
    int line;
    int column;
};

/// Parses the emitted subset back into a Circuit: single qreg, the six gate
/// statements above, optional creg/measure/include lines (accepted and
/// dropped), angle expressions over decimal literals and `pi` with + - * /
/// and parentheses. Errors carry line/column positions.
Circuit parse(const std::string& text);

}  // namespace spinsim::qasm
