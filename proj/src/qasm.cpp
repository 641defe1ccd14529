// Copyright 2026 The qmut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmut/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace qmut {

namespace {

enum class TokenKind {
    Identifier,
    Number,
    Punct,   // one of ( ) [ ] , ; + - * /
    Arrow,   // ->
    String,  // "..."
    End,
};

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws_and_comments();
        const std::size_t line = line_, col = col_;
        if (pos_ >= src_.size()) return {TokenKind::End, "", line, col};

        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_')) {
                text.push_back(src_[pos_]);
                advance();
            }
            return {TokenKind::Identifier, text, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E' ||
                    ((src_[pos_] == '+' || src_[pos_] == '-') && !text.empty() &&
                     (text.back() == 'e' || text.back() == 'E')))) {
                text.push_back(src_[pos_]);
                advance();
            }
            return {TokenKind::Number, text, line, col};
        }
        if (c == '"') {
            advance();
            std::string text;
            while (pos_ < src_.size() && src_[pos_] != '"') {
                text.push_back(src_[pos_]);
                advance();
            }
            if (pos_ >= src_.size()) throw ParseError(line, col, "unterminated string");
            advance();
            return {TokenKind::String, text, line, col};
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance();
            advance();
            return {TokenKind::Arrow, "->", line, col};
        }
        if (std::string("()[],;+-*/").find(c) != std::string::npos) {
            advance();
            return {TokenKind::Punct, std::string(1, c), line, col};
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

struct Register {
    std::size_t offset;
    std::size_t size;
};

class Parser {
public:
    Parser(const std::string& source, std::string name)
        : lexer_(source), name_(std::move(name)) {
        cur_ = lexer_.next();
    }

    Circuit parse() {
        expect_keyword("OPENQASM");
        const Token version = expect(TokenKind::Number, "version number");
        if (version.text != "2.0") {
            throw ParseError(version.line, version.col,
                             "unsupported OPENQASM version " + version.text);
        }
        expect_punct(";");

        // First pass collects declarations and raw statements in order.
        struct RawGate {
            const GateCatalogEntry* entry;
            std::vector<double> params;
            std::vector<std::size_t> qubits;
            Token at;
        };
        struct RawMeasure {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            Token at;
        };

        std::vector<RawGate> gates;
        std::vector<RawMeasure> measures;
        bool measuring = false;

        while (cur_.kind != TokenKind::End) {
            const Token head = expect(TokenKind::Identifier, "statement");
            if (head.text == "include") {
                expect(TokenKind::String, "include path");
                expect_punct(";");
            } else if (head.text == "qreg" || head.text == "creg") {
                parse_register_decl(head.text == "qreg");
            } else if (head.text == "barrier") {
                while (!is_punct(";")) consume();
                expect_punct(";");
            } else if (head.text == "measure") {
                RawMeasure m;
                m.at = head;
                parse_measure(m.pairs);
                measures.push_back(std::move(m));
                measuring = true;
            } else {
                if (measuring) {
                    throw ParseError(head.line, head.col,
                                     "gate after measurement (measurements must come last)");
                }
                const GateCatalogEntry* entry = find_catalog_entry(head.text);
                if (entry == nullptr) {
                    throw ParseError(head.line, head.col, "unknown gate '" + head.text + "'");
                }
                RawGate g;
                g.entry = entry;
                g.at = head;
                if (is_punct("(")) {
                    consume();
                    if (!is_punct(")")) {
                        g.params.push_back(parse_expr());
                        while (is_punct(",")) {
                            consume();
                            g.params.push_back(parse_expr());
                        }
                    }
                    expect_punct(")");
                }
                g.qubits.push_back(parse_qubit_operand());
                while (is_punct(",")) {
                    consume();
                    g.qubits.push_back(parse_qubit_operand());
                }
                expect_punct(";");
                gates.push_back(std::move(g));
            }
        }

        Circuit circuit(name_, num_qubits_, num_clbits_);
        for (auto& g : gates) {
            try {
                circuit.append_gate(g.entry->id, std::move(g.qubits), std::move(g.params));
            } catch (const std::exception& e) {
                throw ParseError(g.at.line, g.at.col, e.what());
            }
        }
        for (const auto& m : measures) {
            for (const auto& [q, c] : m.pairs) {
                try {
                    circuit.add_measurement(q, c);
                } catch (const std::exception& e) {
                    throw ParseError(m.at.line, m.at.col, e.what());
                }
            }
        }
        return circuit;
    }

private:
    void consume() { cur_ = lexer_.next(); }

    Token expect(TokenKind kind, const std::string& what) {
        if (cur_.kind != kind) {
            throw ParseError(cur_.line, cur_.col,
                             "expected " + what + ", got '" + cur_.text + "'");
        }
        Token t = cur_;
        consume();
        return t;
    }

    void expect_keyword(const std::string& kw) {
        const Token t = expect(TokenKind::Identifier, "'" + kw + "'");
        if (t.text != kw) {
            throw ParseError(t.line, t.col, "expected '" + kw + "', got '" + t.text + "'");
        }
    }

    bool is_punct(const std::string& p) const {
        return cur_.kind == TokenKind::Punct && cur_.text == p;
    }

    void expect_punct(const std::string& p) {
        if (!is_punct(p)) {
            throw ParseError(cur_.line, cur_.col,
                             "expected '" + p + "', got '" + cur_.text + "'");
        }
        consume();
    }

    void parse_register_decl(bool quantum) {
        const Token name = expect(TokenKind::Identifier, "register name");
        expect_punct("[");
        const Token size_tok = expect(TokenKind::Number, "register size");
        expect_punct("]");
        expect_punct(";");
        std::size_t size = 0;
        try {
            size = std::stoul(size_tok.text);
        } catch (const std::exception&) {
            throw ParseError(size_tok.line, size_tok.col, "invalid register size");
        }
        auto& table = quantum ? qregs_ : cregs_;
        auto& total = quantum ? num_qubits_ : num_clbits_;
        if (table.count(name.text) != 0) {
            throw ParseError(name.line, name.col, "register '" + name.text + "' redeclared");
        }
        table[name.text] = Register{total, size};
        total += size;
    }

    std::size_t resolve_index(const std::map<std::string, Register>& table,
                              const Token& reg, std::size_t index, bool quantum) {
        auto it = table.find(reg.text);
        if (it == table.end()) {
            throw ParseError(reg.line, reg.col,
                             std::string(quantum ? "quantum" : "classical") +
                                 " register '" + reg.text + "' not declared");
        }
        if (index >= it->second.size) {
            throw ParseError(reg.line, reg.col, reg.text + "[" + std::to_string(index) +
                                                    "] out of range (size " +
                                                    std::to_string(it->second.size) + ")");
        }
        return it->second.offset + index;
    }

    std::size_t parse_qubit_operand() {
        const Token reg = expect(TokenKind::Identifier, "qubit operand");
        if (!is_punct("[")) {
            throw ParseError(reg.line, reg.col,
                             "register operand requires an explicit index");
        }
        consume();
        const Token idx = expect(TokenKind::Number, "qubit index");
        expect_punct("]");
        return resolve_index(qregs_, reg, std::stoul(idx.text), true);
    }

    void parse_measure(std::vector<std::pair<std::size_t, std::size_t>>& out) {
        const Token qreg = expect(TokenKind::Identifier, "measured register");
        std::optional<std::size_t> qidx;
        if (is_punct("[")) {
            consume();
            qidx = std::stoul(expect(TokenKind::Number, "qubit index").text);
            expect_punct("]");
        }
        expect(TokenKind::Arrow, "'->'");
        const Token creg = expect(TokenKind::Identifier, "target register");
        std::optional<std::size_t> cidx;
        if (is_punct("[")) {
            consume();
            cidx = std::stoul(expect(TokenKind::Number, "clbit index").text);
            expect_punct("]");
        }
        expect_punct(";");

        if (qidx.has_value() != cidx.has_value()) {
            throw ParseError(qreg.line, qreg.col,
                             "measure must be indexed on both sides or on neither");
        }
        if (qidx.has_value()) {
            out.emplace_back(resolve_index(qregs_, qreg, *qidx, true),
                             resolve_index(cregs_, creg, *cidx, false));
        } else {
            // Whole-register form maps index-wise.
            auto qit = qregs_.find(qreg.text);
            auto cit = cregs_.find(creg.text);
            if (qit == qregs_.end()) {
                throw ParseError(qreg.line, qreg.col,
                                 "quantum register '" + qreg.text + "' not declared");
            }
            if (cit == cregs_.end()) {
                throw ParseError(creg.line, creg.col,
                                 "classical register '" + creg.text + "' not declared");
            }
            if (qit->second.size != cit->second.size) {
                throw ParseError(qreg.line, qreg.col,
                                 "measure register size mismatch (" +
                                     std::to_string(qit->second.size) + " vs " +
                                     std::to_string(cit->second.size) + ")");
            }
            for (std::size_t i = 0; i < qit->second.size; ++i) {
                out.emplace_back(qit->second.offset + i, cit->second.offset + i);
            }
        }
    }

    // expr := term (('+'|'-') term)*
    double parse_expr() {
        double value = parse_term();
        while (is_punct("+") || is_punct("-")) {
            const bool plus = cur_.text == "+";
            consume();
            const double rhs = parse_term();
            value = plus ? value + rhs : value - rhs;
        }
        return value;
    }

    double parse_term() {
        double value = parse_factor();
        while (is_punct("*") || is_punct("/")) {
            const bool mul = cur_.text == "*";
            consume();
            const double rhs = parse_factor();
            if (!mul && rhs == 0.0) {
                throw ParseError(cur_.line, cur_.col, "division by zero in parameter");
            }
            value = mul ? value * rhs : value / rhs;
        }
        return value;
    }

    double parse_factor() {
        if (is_punct("-")) {
            consume();
            return -parse_factor();
        }
        if (is_punct("+")) {
            consume();
            return parse_factor();
        }
        if (is_punct("(")) {
            consume();
            const double value = parse_expr();
            expect_punct(")");
            return value;
        }
        if (cur_.kind == TokenKind::Identifier && cur_.text == "pi") {
            consume();
            return M_PI;
        }
        if (cur_.kind == TokenKind::Number) {
            const Token t = cur_;
            consume();
            try {
                return std::stod(t.text);
            } catch (const std::exception&) {
                throw ParseError(t.line, t.col, "invalid number '" + t.text + "'");
            }
        }
        throw ParseError(cur_.line, cur_.col,
                         "expected parameter expression, got '" + cur_.text + "'");
    }

    Lexer lexer_;
    Token cur_;
    std::string name_;
    std::map<std::string, Register> qregs_;
    std::map<std::string, Register> cregs_;
    std::size_t num_qubits_ = 0;
    std::size_t num_clbits_ = 0;
};

std::string format_param(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace

Circuit parse_qasm(const std::string& source, const std::string& name) {
    return Parser(source, name).parse();
}

std::string serialize_qasm(const Circuit& circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.num_qubits() << "];\n";
    out << "creg c[" << circuit.num_clbits() << "];\n";
    for (const GateApplication& g : circuit.gates()) {
        out << gate_name(g.gate);
        if (!g.params.empty()) {
            out << "(";
            for (std::size_t i = 0; i < g.params.size(); ++i) {
                if (i > 0) out << ",";
                out << format_param(g.params[i]);
            }
            out << ")";
        }
        out << " ";
        for (std::size_t i = 0; i < g.operands.size(); ++i) {
            if (i > 0) out << ",";
            out << "q[" << g.operands[i] << "]";
        }
        out << ";\n";
    }
    for (const auto& [qubit, clbit] : circuit.measurements()) {
        out << "measure q[" << qubit << "] -> c[" << clbit << "];\n";
    }
    return out.str();
}

}  // namespace qmut
