// Copyright 2026 The rhq Authors
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

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rhq/error.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/gate.hpp"

namespace rhq {

/// A parsed OpenQASM 2.0 file.
struct QasmProgram {
  std::string source_name;
  std::size_t declared_qubits = 0;
  Circuit circuit;
  /// One entry per skipped `measure`, `barrier` or `creg` statement.
  std::vector<std::string> warnings;
};

namespace qasm_detail {

enum class Tok { Id, Real, Int, String, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Id;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        lex_number(t);
      } else if (c == '"') {
        advance();
        t.kind = Tok::String;
        while (pos_ < src_.size() && src_[pos_] != '"') {
          if (src_[pos_] == '\n') throw ParseError("unterminated string", t.line, t.col);
          t.text += advance();
        }
        if (pos_ >= src_.size()) throw ParseError("unterminated string", t.line, t.col);
        advance();
      } else if (c == '-' && peek(1) == '>') {
        t.kind = Tok::Sym;
        t.text = "->";
        advance();
        advance();
      } else if (c == '=' && peek(1) == '=') {
        t.kind = Tok::Sym;
        t.text = "==";
        advance();
        advance();
      } else if (std::string_view("()[]{},;+-*/^").find(c) != std::string_view::npos) {
        t.kind = Tok::Sym;
        t.text = std::string(1, advance());
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  void lex_number(Token& t) {
    bool real = false;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        t.text += advance();
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      real = true;
      t.text += advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      real = true;
      t.text += advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
        t.text += advance();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError("malformed exponent in number", t.line, t.col);
      digits();
    }
    t.kind = real ? Tok::Real : Tok::Int;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

/// Arithmetic expression over numbers, pi and gate parameters.
struct Expr {
  enum class Op { Num, Param, Neg, Add, Sub, Mul, Div, Pow, Func };
  Op op = Op::Num;
  double value = 0.0;
  std::string name;  // parameter or function name
  std::vector<Expr> args;
  std::size_t line = 0, col = 0;

  double eval(const std::map<std::string, double>& env) const {
    switch (op) {
      case Op::Num: return value;
      case Op::Param: {
        auto it = env.find(name);
        if (it == env.end())
          throw ParseError("unknown parameter '" + name + "'", line, col);
        return it->second;
      }
      case Op::Neg: return -args[0].eval(env);
      case Op::Add: return args[0].eval(env) + args[1].eval(env);
      case Op::Sub: return args[0].eval(env) - args[1].eval(env);
      case Op::Mul: return args[0].eval(env) * args[1].eval(env);
      case Op::Div: return args[0].eval(env) / args[1].eval(env);
      case Op::Pow: return std::pow(args[0].eval(env), args[1].eval(env));
      case Op::Func: {
        const double x = args[0].eval(env);
        if (name == "sin") return std::sin(x);
        if (name == "cos") return std::cos(x);
        if (name == "tan") return std::tan(x);
        if (name == "exp") return std::exp(x);
        if (name == "ln") return std::log(x);
        if (name == "sqrt") return std::sqrt(x);
        throw ParseError("unknown function '" + name + "'", line, col);
      }
    }
    return 0.0;
  }
};

/// Operand of a gate call: a whole register or one indexed qubit. Inside gate
/// bodies `index` is empty and `name` is a formal qubit argument.
struct Operand {
  std::string name;
  std::optional<std::size_t> index;
  std::size_t line = 0, col = 0;
};

struct GateCall {
  std::string name;
  std::vector<Expr> params;
  std::vector<Operand> operands;
  std::size_t line = 0, col = 0;
};

struct GateDef {
  std::vector<std::string> params;
  std::vector<std::string> qargs;
  std::vector<GateCall> body;
};

struct Builtin {
  std::size_t num_params;
  std::size_t num_qubits;
  std::function<std::vector<Gate>(const std::vector<double>&, const std::vector<Qubit>&)> emit;
};

inline const std::map<std::string, Builtin, std::less<>>& builtins() {
  using V = std::vector<double>;
  using Q = std::vector<Qubit>;
  auto one = [](GateKind k) {
    return Builtin{0, 1, [k](const V&, const Q& q) { return std::vector<Gate>{gates::single(k, q[0])}; }};
  };
  auto rot = [](GateKind k) {
    return Builtin{1, 1, [k](const V& p, const Q& q) {
                     return std::vector<Gate>{gates::rotation(k, q[0], ParamExpr::literal(p[0]))};
                   }};
  };
  auto u3 = Builtin{3, 1, [](const V& p, const Q& q) {
                      return std::vector<Gate>{gates::u3(q[0], p[0], p[1], p[2])};
                    }};
  auto cx = Builtin{0, 2, [](const V&, const Q& q) { return std::vector<Gate>{gates::cx(q[0], q[1])}; }};
  static const std::map<std::string, Builtin, std::less<>> table = {
      {"id", one(GateKind::I)},   {"x", one(GateKind::X)},     {"y", one(GateKind::Y)},
      {"z", one(GateKind::Z)},    {"h", one(GateKind::H)},     {"s", one(GateKind::S)},
      {"sdg", one(GateKind::Sdg)}, {"t", one(GateKind::T)},    {"tdg", one(GateKind::Tdg)},
      {"rx", rot(GateKind::Rx)},  {"ry", rot(GateKind::Ry)},   {"rz", rot(GateKind::Rz)},
      {"u1", rot(GateKind::U1)},
      {"u2", Builtin{2, 1, [](const V& p, const Q& q) {
                       return std::vector<Gate>{gates::u2(q[0], p[0], p[1])};
                     }}},
      {"u3", u3},
      {"U", u3},
      {"cx", cx},
      {"CX", cx},
      {"cz", Builtin{0, 2, [](const V&, const Q& q) { return std::vector<Gate>{gates::cz(q[0], q[1])}; }}},
      {"ccx", Builtin{0, 3, [](const V&, const Q& q) {
                        return std::vector<Gate>{gates::ccx(q[0], q[1], q[2])};
                      }}},
      {"swap", Builtin{0, 2, [](const V&, const Q& q) { return std::vector<Gate>{gates::swap(q[0], q[1])}; }}},
      // qelib1.inc: cu1(l) a,b { u1(l/2) a; cx a,b; u1(-l/2) b; cx a,b; u1(l/2) b; }
      {"cu1", Builtin{1, 2, [](const V& p, const Q& q) {
                        return std::vector<Gate>{gates::u1(q[0], p[0] / 2), gates::cx(q[0], q[1]),
                                                 gates::u1(q[1], -p[0] / 2), gates::cx(q[0], q[1]),
                                                 gates::u1(q[1], p[0] / 2)};
                      }}},
  };
  return table;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::string source_name)
      : toks_(std::move(toks)) {
    prog_.source_name = std::move(source_name);
  }

  QasmProgram run() {
    expect_id("OPENQASM");
    const Token& v = next();
    if ((v.kind != Tok::Real && v.kind != Tok::Int) || std::stod(v.text) != 2.0)
      throw ParseError("only OPENQASM 2.0 is supported", v.line, v.col);
    expect_sym(";");
    while (cur().kind != Tok::End) statement();
    if (prog_.declared_qubits == 0) throw ParseError("program declares no qubits", 1, 1);
    prog_.circuit = Circuit(prog_.declared_qubits, std::move(gates_));
    return std::move(prog_);
  }

 private:
  struct Register {
    std::size_t offset;
    std::size_t size;
  };

  const Token& cur() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool at_sym(std::string_view s) const { return cur().kind == Tok::Sym && cur().text == s; }
  bool at_id(std::string_view s) const { return cur().kind == Tok::Id && cur().text == s; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw ParseError(msg, t.line, t.col);
  }

  void expect_sym(std::string_view s) {
    if (!at_sym(s))
      fail("expected '" + std::string(s) + "' but found '" + describe(cur()) + "'", cur());
    next();
  }
  void expect_id(std::string_view s) {
    if (!at_id(s)) fail("expected '" + std::string(s) + "'", cur());
    next();
  }
  std::string identifier() {
    if (cur().kind != Tok::Id) fail("expected identifier but found '" + describe(cur()) + "'", cur());
    return next().text;
  }
  std::size_t integer() {
    if (cur().kind != Tok::Int) fail("expected integer", cur());
    return static_cast<std::size_t>(std::stoull(next().text));
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? std::string("end of file") : t.text;
  }

  void statement() {
    const Token& t = cur();
    if (t.kind != Tok::Id) fail("expected statement but found '" + describe(t) + "'", t);
    const std::string& kw = t.text;
    if (kw == "include") {
      next();
      const Token& f = next();
      if (f.kind != Tok::String) fail("expected file name after include", f);
      if (f.text != "qelib1.inc") fail("unsupported include '" + f.text + "'", f);
      expect_sym(";");
    } else if (kw == "qreg" || kw == "creg") {
      next();
      const std::string name = identifier();
      expect_sym("[");
      const std::size_t size = integer();
      expect_sym("]");
      expect_sym(";");
      if (size == 0) fail("register '" + name + "' has size 0", t);
      if (qregs_.count(name) || cregs_.count(name)) fail("duplicate register '" + name + "'", t);
      if (kw == "qreg") {
        qregs_[name] = {prog_.declared_qubits, size};
        prog_.declared_qubits += size;
      } else {
        cregs_[name] = size;
        warn(t, "creg '" + name + "' ignored");
      }
    } else if (kw == "gate") {
      gate_definition();
    } else if (kw == "measure") {
      next();
      operand();
      expect_sym("->");
      const Token& c = cur();
      const std::string cname = identifier();
      if (!cregs_.count(cname)) fail("unknown classical register '" + cname + "'", c);
      if (at_sym("[")) {
        next();
        integer();
        expect_sym("]");
      }
      expect_sym(";");
      warn(t, "measure skipped");
    } else if (kw == "barrier") {
      next();
      operand();
      while (at_sym(",")) {
        next();
        operand();
      }
      expect_sym(";");
      warn(t, "barrier skipped");
    } else if (kw == "if" || kw == "opaque" || kw == "reset") {
      fail("'" + kw + "' statements are not supported", t);
    } else {
      auto call = gate_call();
      apply_top_level(call);
    }
  }

  void warn(const Token& t, const std::string& what) {
    prog_.warnings.push_back("line " + std::to_string(t.line) + ": " + what);
  }

  Operand operand() {
    Operand o;
    o.line = cur().line;
    o.col = cur().col;
    o.name = identifier();
    if (at_sym("[")) {
      next();
      o.index = integer();
      expect_sym("]");
    }
    return o;
  }

  GateCall gate_call() {
    GateCall c;
    c.line = cur().line;
    c.col = cur().col;
    c.name = identifier();
    if (at_sym("(")) {
      next();
      if (!at_sym(")")) {
        c.params.push_back(expression());
        while (at_sym(",")) {
          next();
          c.params.push_back(expression());
        }
      }
      expect_sym(")");
    }
    c.operands.push_back(operand());
    while (at_sym(",")) {
      next();
      c.operands.push_back(operand());
    }
    expect_sym(";");
    return c;
  }

  void gate_definition() {
    const Token& kw = next();
    const Token& name_tok = cur();
    const std::string name = identifier();
    if (builtins().count(name) || defs_.count(name))
      fail("gate '" + name + "' is already defined", name_tok);
    GateDef def;
    if (at_sym("(")) {
      next();
      if (!at_sym(")")) {
        def.params.push_back(identifier());
        while (at_sym(",")) {
          next();
          def.params.push_back(identifier());
        }
      }
      expect_sym(")");
    }
    def.qargs.push_back(identifier());
    while (at_sym(",")) {
      next();
      def.qargs.push_back(identifier());
    }
    expect_sym("{");
    while (!at_sym("}")) {
      if (cur().kind == Tok::End) fail("unterminated gate body", kw);
      if (at_id("barrier")) {
        next();
        operand();
        while (at_sym(",")) {
          next();
          operand();
        }
        expect_sym(";");
        continue;
      }
      auto call = gate_call();
      if (call.name == name)
        throw ParseError("recursive gate definition '" + name + "'", call.line, call.col);
      if (!builtins().count(call.name) && !defs_.count(call.name))
        throw ParseError("unknown gate '" + call.name + "'", call.line, call.col);
      for (const auto& o : call.operands) {
        if (o.index) throw ParseError("indexed operand inside gate body", o.line, o.col);
        if (std::find(def.qargs.begin(), def.qargs.end(), o.name) == def.qargs.end())
          throw ParseError("unknown qubit argument '" + o.name + "'", o.line, o.col);
      }
      def.body.push_back(std::move(call));
    }
    next();
    defs_[name] = std::move(def);
  }

  // expression := term (('+'|'-') term)*
  Expr expression() {
    Expr lhs = term();
    while (at_sym("+") || at_sym("-")) {
      const Token& op = next();
      Expr e{op.text == "+" ? Expr::Op::Add : Expr::Op::Sub, 0.0, {}, {lhs, term()}, op.line, op.col};
      lhs = std::move(e);
    }
    return lhs;
  }
  // term := unary (('*'|'/') unary)*
  Expr term() {
    Expr lhs = unary();
    while (at_sym("*") || at_sym("/")) {
      const Token& op = next();
      Expr e{op.text == "*" ? Expr::Op::Mul : Expr::Op::Div, 0.0, {}, {lhs, unary()}, op.line, op.col};
      lhs = std::move(e);
    }
    return lhs;
  }
  // unary := '-' unary | power
  Expr unary() {
    if (at_sym("-")) {
      const Token& op = next();
      return Expr{Expr::Op::Neg, 0.0, {}, {unary()}, op.line, op.col};
    }
    if (at_sym("+")) {
      next();
      return unary();
    }
    return power();
  }
  // power := primary ('^' unary)?
  Expr power() {
    Expr base = primary();
    if (at_sym("^")) {
      const Token& op = next();
      return Expr{Expr::Op::Pow, 0.0, {}, {base, unary()}, op.line, op.col};
    }
    return base;
  }
  Expr primary() {
    const Token& t = cur();
    if (t.kind == Tok::Real || t.kind == Tok::Int) {
      next();
      return Expr{Expr::Op::Num, std::stod(t.text), {}, {}, t.line, t.col};
    }
    if (at_sym("(")) {
      next();
      Expr e = expression();
      expect_sym(")");
      return e;
    }
    if (t.kind == Tok::Id) {
      next();
      if (t.text == "pi") return Expr{Expr::Op::Num, std::numbers::pi, {}, {}, t.line, t.col};
      if (at_sym("(")) {
        next();
        Expr arg = expression();
        expect_sym(")");
        return Expr{Expr::Op::Func, 0.0, t.text, {std::move(arg)}, t.line, t.col};
      }
      return Expr{Expr::Op::Param, 0.0, t.text, {}, t.line, t.col};
    }
    fail("expected expression but found '" + describe(t) + "'", t);
  }

  /// Resolves register broadcasting and expands the call.
  void apply_top_level(const GateCall& call) {
    std::optional<std::size_t> width;
    for (const auto& o : call.operands) {
      auto it = qregs_.find(o.name);
      if (it == qregs_.end()) {
        if (cregs_.count(o.name))
          throw ParseError("classical register '" + o.name + "' used as gate operand", o.line, o.col);
        throw ParseError("unknown quantum register '" + o.name + "'", o.line, o.col);
      }
      if (o.index) {
        if (*o.index >= it->second.size)
          throw ParseError("index " + std::to_string(*o.index) + " out of range for register '" +
                               o.name + "' of size " + std::to_string(it->second.size),
                           o.line, o.col);
      } else if (!width) {
        width = it->second.size;
      } else if (*width != it->second.size) {
        throw ParseError("register size mismatch in '" + call.name + "'", o.line, o.col);
      }
    }
    std::vector<double> params;
    params.reserve(call.params.size());
    for (const auto& e : call.params) params.push_back(e.eval({}));
    for (std::size_t i = 0; i < width.value_or(1); ++i) {
      std::vector<Qubit> qs;
      for (const auto& o : call.operands) {
        const auto& r = qregs_.at(o.name);
        qs.push_back(r.offset + (o.index ? *o.index : i));
      }
      expand(call.name, params, qs, call.line, call.col);
    }
  }

  void expand(const std::string& name, const std::vector<double>& params,
              const std::vector<Qubit>& qs, std::size_t line, std::size_t col) {
    if (auto b = builtins().find(name); b != builtins().end()) {
      check_arity(name, b->second.num_params, b->second.num_qubits, params, qs, line, col);
      for (auto& g : b->second.emit(params, qs)) {
        try {
          g.validate(prog_.declared_qubits);
        } catch (const Error& e) {
          throw ParseError(e.what(), line, col);
        }
        gates_.push_back(std::move(g));
      }
      return;
    }
    auto d = defs_.find(name);
    if (d == defs_.end()) throw ParseError("unknown gate '" + name + "'", line, col);
    const GateDef& def = d->second;
    check_arity(name, def.params.size(), def.qargs.size(), params, qs, line, col);
    std::map<std::string, double> env;
    for (std::size_t i = 0; i < def.params.size(); ++i) env[def.params[i]] = params[i];
    std::map<std::string, Qubit> qmap;
    for (std::size_t i = 0; i < def.qargs.size(); ++i) qmap[def.qargs[i]] = qs[i];
    for (const auto& inner : def.body) {
      std::vector<double> ip;
      for (const auto& e : inner.params) ip.push_back(e.eval(env));
      std::vector<Qubit> iq;
      for (const auto& o : inner.operands) iq.push_back(qmap.at(o.name));
      expand(inner.name, ip, iq, inner.line, inner.col);
    }
  }

  static void check_arity(const std::string& name, std::size_t np, std::size_t nq,
                          const std::vector<double>& params, const std::vector<Qubit>& qs,
                          std::size_t line, std::size_t col) {
    if (params.size() != np)
      throw ParseError("gate '" + name + "' takes " + std::to_string(np) + " parameter(s), got " +
                           std::to_string(params.size()),
                       line, col);
    if (qs.size() != nq)
      throw ParseError("gate '" + name + "' takes " + std::to_string(nq) + " qubit(s), got " +
                           std::to_string(qs.size()),
                       line, col);
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (qs[i] == qs[j])
          throw ParseError("gate '" + name + "' uses a qubit twice", line, col);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  QasmProgram prog_;
  std::vector<Gate> gates_;
  std::map<std::string, Register, std::less<>> qregs_;
  std::map<std::string, std::size_t, std::less<>> cregs_;
  std::map<std::string, GateDef, std::less<>> defs_;
};

}  // namespace qasm_detail

/// Parses the supported OpenQASM 2.0 subset (see docs/QASM.md). Throws
/// ParseError with a line:column prefix on any failure.
inline QasmProgram parse_qasm(std::string_view text,
                              std::string source_name = "<memory>") {
  qasm_detail::Lexer lexer(text);
  qasm_detail::Parser parser(lexer.run(), std::move(source_name));
  return parser.run();
}

inline QasmProgram parse_qasm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("cannot read '" + path + "'");
  return parse_qasm(ss.str(), path);
}

}  // namespace rhq
