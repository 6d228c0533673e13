#pragma once

#include <stdexcept>
#include <string>

namespace bicross {

// All structural failures carry a machine-readable code plus a witness
// string so the CLI can forward them verbatim.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(std::string code, const std::string& witness)
        : std::runtime_error(code + (witness.empty() ? "" : ": " + witness)),
          m_code(std::move(code)), m_witness(witness) {}

    const std::string& code() const { return m_code; }
    const std::string& witness() const { return m_witness; }

private:
    std::string m_code;
    std::string m_witness;
};

class SizeGuardError : public AlgebraError {
public:
    SizeGuardError(const std::string& witness) : AlgebraError("SizeGuard", witness) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + what),
          m_line(line), m_col(col) {}

    int line() const { return m_line; }
    int col() const { return m_col; }

private:
    int m_line;
    int m_col;
};

} // namespace bicross
