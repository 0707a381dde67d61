#include "admit/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "admit/error.hpp"

namespace admit {

namespace {

constexpr std::array<std::string_view, 7> kKeywords = {
    "algebra", "structure", "elements", "op", "partial", "relation", "order"};

bool is_keyword(std::string_view s) {
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

bool plain_char(char c) {
  auto const u = static_cast<unsigned char>(c);
  if (u >= 0x80) {
    return true;
  }
  if (u <= 0x20 || u == 0x7f) {
    return false;
  }
  switch (c) {
    case '#': case '"': case '/': case ',': case '<': case '>':
    case '(': case ')': case '=': case '-':
      return false;
    default:
      return true;
  }
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) ||
                     s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_variable_name(std::string_view s) {
  return s.size() >= 2 && s[0] == 'x' &&
         std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// ---------------------------------------------------------------------------
// Line tokenizer shared by the table formats.

enum class Tok { word, quoted, arrow, lt, slash };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;

  bool is(std::string_view kw) const { return kind == Tok::word && text == kw; }
  bool label_like() const { return kind == Tok::word || kind == Tok::quoted; }
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    std::string_view const s = text.substr(pos, eol - pos);
    ++line_no;
    Line out{line_no, {}};
    std::size_t i = 0;
    while (i < s.size()) {
      char const c = s[i];
      std::size_t const col = i + 1;
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (c == '#') {
        break;
      } else if (c == '"') {
        std::string v;
        ++i;
        bool closed = false;
        while (i < s.size()) {
          if (s[i] == '\\' && i + 1 < s.size()) {
            v += s[i + 1];
            i += 2;
          } else if (s[i] == '"') {
            ++i;
            closed = true;
            break;
          } else {
            v += s[i++];
          }
        }
        if (!closed) {
          throw ParseError("unterminated quoted label", line_no, col);
        }
        out.tokens.push_back({Tok::quoted, std::move(v), line_no, col});
      } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
        out.tokens.push_back({Tok::arrow, "->", line_no, col});
        i += 2;
      } else if (c == '<') {
        out.tokens.push_back({Tok::lt, "<", line_no, col});
        ++i;
      } else if (c == '/') {
        out.tokens.push_back({Tok::slash, "/", line_no, col});
        ++i;
      } else if (plain_char(c)) {
        std::size_t j = i;
        while (j < s.size() && plain_char(s[j])) {
          ++j;
        }
        out.tokens.push_back(
            {Tok::word, std::string(s.substr(i, j - i)), line_no, col});
        i = j;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_no, col);
      }
    }
    if (!out.tokens.empty()) {
      lines.push_back(std::move(out));
    }
    pos = eol + 1;
  }
  return lines;
}

std::string quote(std::string_view s) {
  if (is_plain_label(s)) {
    return std::string(s);
  }
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      r += '\\';
    }
    r += c;
  }
  return r + "\"";
}

[[noreturn]] void fail(Token const& t, std::string const& msg) {
  throw ParseError(msg, t.line, t.col);
}

// Shared state for the header/elements part of both table formats.
struct Universe {
  std::vector<std::string> labels;
  std::map<std::string, Element, std::less<>> index;

  Element resolve(Token const& t) const {
    if (!t.label_like()) {
      fail(t, "expected an element label, found '" + t.text + "'");
    }
    auto it = index.find(t.text);
    if (it == index.end()) {
      fail(t, "unknown label '" + t.text + "'");
    }
    return it->second;
  }

  std::string tuple_text(std::span<Element const> args) const {
    std::string s = "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      s += (i ? ", " : "") + labels[args[i]];
    }
    return s + ")";
  }
};

std::string parse_header(Line const& l, std::string_view kw) {
  auto const& t = l.tokens;
  if (!t[0].is(kw)) {
    fail(t[0], "expected '" + std::string(kw) + " NAME'");
  }
  if (t.size() != 2 || !t[1].label_like()) {
    fail(t[0], "expected '" + std::string(kw) + " NAME'");
  }
  return t[1].text;
}

Universe parse_elements(Line const& l) {
  auto const& t = l.tokens;
  if (!t[0].is("elements")) {
    fail(t[0], "expected 'elements' line");
  }
  Universe u;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!t[i].label_like()) {
      fail(t[i], "expected an element label, found '" + t[i].text + "'");
    }
    if (!u.index.emplace(t[i].text, static_cast<Element>(u.labels.size()))
             .second) {
      fail(t[i], "duplicate element '" + t[i].text + "'");
    }
    u.labels.push_back(t[i].text);
  }
  if (u.labels.empty()) {
    fail(t[0], "empty universe");
  }
  return u;
}

// `KW NAME/ARITY`; nothing when the line is not such a header.
struct BlockHeader {
  std::string kind;
  std::string name;
  int arity = 0;
  Token at;
};

bool looks_like_header(Line const& l) {
  auto const& t = l.tokens;
  if (t[0].kind != Tok::word) {
    return false;
  }
  if (t[0].text == "order") {
    return t.size() == 2 && t[1].kind == Tok::word;
  }
  if (t[0].text == "op" || t[0].text == "partial" || t[0].text == "relation") {
    return t.size() >= 2 && t[1].kind == Tok::word &&
           std::none_of(t.begin(), t.end(),
                        [](Token const& x) { return x.kind == Tok::arrow; });
  }
  return false;
}

BlockHeader parse_block_header(Line const& l) {
  auto const& t = l.tokens;
  BlockHeader h{t[0].text, t[1].text, 2, t[0]};
  if (!is_identifier(h.name)) {
    fail(t[1], "'" + h.name + "' is not a valid symbol name");
  }
  if (h.kind == "order") {
    return h;
  }
  if (t.size() != 4 || t[2].kind != Tok::slash || t[3].kind != Tok::word) {
    fail(t[0], "expected '" + h.kind + " NAME/ARITY'");
  }
  std::string const& a = t[3].text;
  if (a.empty() || a.size() > 2 ||
      !std::all_of(a.begin(), a.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    fail(t[3], "bad arity '" + a + "'");
  }
  h.arity = std::stoi(a);
  if (h.kind == "relation" && h.arity == 0) {
    fail(t[3], "relations need arity at least 1");
  }
  if (h.arity > 8) {
    fail(t[3], "arity " + a + " is too large");
  }
  return h;
}

std::size_t ipow(std::size_t n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n;
    if (r > (std::size_t{1} << 26)) {
      throw AlgebraError("table too large");
    }
  }
  return r;
}

void decode(std::size_t idx, std::size_t n, std::span<Element> out) {
  for (std::size_t j = out.size(); j-- > 0;) {
    out[j] = static_cast<Element>(idx % n);
    idx /= n;
  }
}

// Reads `a1 .. ak -> v` (or `v` alone when k = 0) into the table.
void read_table_row(Line const& l, BlockHeader const& h, Universe const& u,
                    std::vector<Element>& table) {
  auto const& t = l.tokens;
  std::size_t const k = static_cast<std::size_t>(h.arity);
  std::size_t arrow = t.size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].kind == Tok::arrow) {
      arrow = i;
      break;
    }
  }
  if (arrow == t.size()) {
    if (k == 0 && t.size() == 1) {
      arrow = std::size_t(-1);
    } else {
      fail(t[0], "expected 'args -> value' row for '" + h.name + "'");
    }
  }
  std::size_t const nargs = arrow == std::size_t(-1) ? 0 : arrow;
  if (nargs != k) {
    fail(t[0], "'" + h.name + "' has arity " + std::to_string(k) +
                   " but the row has " + std::to_string(nargs) + " arguments");
  }
  std::size_t const vpos = arrow == std::size_t(-1) ? 0 : arrow + 1;
  if (vpos + 1 != t.size()) {
    fail(vpos < t.size() ? t[vpos] : t.back(),
         "expected exactly one value after '->'");
  }
  std::vector<Element> args(k);
  for (std::size_t i = 0; i < k; ++i) {
    args[i] = u.resolve(t[i]);
  }
  Element const v = u.resolve(t[vpos]);
  std::size_t const idx = tuple_index(u.labels.size(), args);
  if (table[idx] != kUndefined) {
    fail(t[0], "duplicate row for '" + h.name + "' at " + u.tuple_text(args));
  }
  table[idx] = v;
}

void check_total(BlockHeader const& h, Universe const& u,
                 std::vector<Element> const& table) {
  std::vector<Element> args(static_cast<std::size_t>(h.arity));
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == kUndefined) {
      decode(i, u.labels.size(), args);
      fail(h.at, "'" + h.name + "' is missing the row for " +
                     u.tuple_text(args));
    }
  }
}

void print_table(std::ostringstream& os, std::vector<std::string> const& labels,
                 int arity, std::span<Element const> table) {
  std::size_t const n = labels.size();
  std::vector<Element> args(static_cast<std::size_t>(arity));
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == kUndefined) {
      continue;
    }
    decode(i, n, args);
    os << " ";
    for (Element a : args) {
      os << " " << quote(labels[a]);
    }
    os << " -> " << quote(labels[table[i]]) << "\n";
  }
}

void print_elements(std::ostringstream& os,
                    std::vector<std::string> const& labels) {
  os << "elements";
  for (auto const& l : labels) {
    os << " " << quote(l);
  }
  os << "\n";
}

// ---------------------------------------------------------------------------
// Term grammar.

class TermParser {
 public:
  TermParser(std::string_view s, Signature const& sig, std::size_t line,
             std::size_t col0)
      : s_(s), sig_(sig), line_(line), col0_(col0) {}

  QuasiIdentity quasi_identity() {
    QuasiIdentity q;
    skip();
    if (!at_implies()) {
      while (true) {
        q.premises.push_back(identity());
        skip();
        if (peek() == ',') {
          ++i_;
          continue;
        }
        break;
      }
      skip();
      if (!at_implies()) {
        error("expected '=>' or ','");
      }
    }
    i_ += 2;
    q.conclusion = identity();
    skip();
    if (peek() == '=' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
      error("malformed arrow: more than one '=>'");
    }
    end();
    return q;
  }

  Term whole_term() {
    Term t = term();
    end();
    return t;
  }

 private:
  void end() {
    skip();
    if (i_ != s_.size()) {
      error(std::string("unexpected '") + s_[i_] + "'");
    }
  }

  [[noreturn]] void error(std::string const& msg) const {
    throw ParseError(msg, line_, col0_ + i_);
  }

  void skip() {
    while (i_ < s_.size() &&
           (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\r')) {
      ++i_;
    }
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  bool at_implies() const {
    return i_ + 1 < s_.size() && s_[i_] == '=' && s_[i_ + 1] == '>';
  }

  Identity identity() {
    Term l = term();
    skip();
    if (peek() != '=' || at_implies()) {
      if (at_implies()) {
        error("malformed arrow: '=>' where '=' was expected");
      }
      error("expected '='");
    }
    ++i_;
    Term r = term();
    return {std::move(l), std::move(r)};
  }

  std::string ident() {
    skip();
    std::size_t const start = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      ++i_;
    }
    if (start == i_ || std::isdigit(static_cast<unsigned char>(s_[start]))) {
      i_ = start;
      if (i_ >= s_.size()) {
        error("unexpected end of input, expected a term");
      }
      error(std::string("expected a term, found '") + s_[i_] + "'");
    }
    return std::string(s_.substr(start, i_ - start));
  }

  std::size_t lookup(std::string const& name, std::size_t at) {
    auto op = sig_.find(name);
    if (!op) {
      i_ = at;
      error("unknown operation '" + name + "'");
    }
    return *op;
  }

  Term term() {
    skip();
    if (peek() == '(') {
      ++i_;
      Term l = term();
      skip();
      std::size_t const at = i_;
      std::string name = ident();
      std::size_t const op = lookup(name, at);
      if (sig_[op].arity != 2) {
        i_ = at;
        error("infix '" + name + "' is not binary");
      }
      Term r = term();
      skip();
      if (peek() != ')') {
        error("expected ')' after infix term");
      }
      ++i_;
      std::vector<Term> args;
      args.push_back(std::move(l));
      args.push_back(std::move(r));
      return Term::apply(std::move(name), std::move(args));
    }
    skip();
    std::size_t const at = i_;
    std::string name = ident();
    skip();
    bool const call = peek() == '(';
    if (!call && is_variable_name(name)) {
      if (name.size() > 10) {
        i_ = at;
        error("variable index too large");
      }
      return Term::variable(std::stoul(name.substr(1)));
    }
    std::size_t const op = lookup(name, at);
    int const arity = sig_[op].arity;
    std::vector<Term> args;
    if (call) {
      ++i_;
      skip();
      if (peek() != ')') {
        while (true) {
          args.push_back(term());
          skip();
          if (peek() == ',') {
            ++i_;
            continue;
          }
          break;
        }
      }
      skip();
      if (peek() != ')') {
        error("expected ')' or ','");
      }
      ++i_;
    }
    if (static_cast<int>(args.size()) != arity) {
      i_ = at;
      error("'" + name + "' expects " + std::to_string(arity) +
            " arguments, got " + std::to_string(args.size()));
    }
    return Term::apply(std::move(name), std::move(args));
  }

  std::string_view s_;
  Signature const& sig_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t i_ = 0;
};

}  // namespace

bool is_plain_label(std::string_view s) {
  return !s.empty() && !is_keyword(s) &&
         std::all_of(s.begin(), s.end(), plain_char);
}

FiniteAlgebra parse_algebra(std::string_view text) {
  auto const lines = tokenize(text);
  if (lines.empty()) {
    throw ParseError("empty document, expected 'algebra NAME'", 1, 1);
  }
  std::string name = parse_header(lines[0], "algebra");
  if (lines.size() < 2) {
    throw ParseError("expected 'elements' line", lines[0].number + 1, 1);
  }
  Universe const u = parse_elements(lines[1]);
  std::size_t const n = u.labels.size();

  std::vector<OpSymbol> ops;
  std::vector<std::vector<Element>> tables;
  std::vector<BlockHeader> headers;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    Line const& l = lines[li];
    if (looks_like_header(l)) {
      BlockHeader h = parse_block_header(l);
      if (h.kind != "op") {
        fail(l.tokens[0], "'" + h.kind + "' blocks belong in structures");
      }
      for (auto const& o : ops) {
        if (o.name == h.name) {
          fail(l.tokens[1], "duplicate operation '" + h.name + "'");
        }
      }
      ops.push_back({h.name, h.arity});
      tables.emplace_back(ipow(n, h.arity), kUndefined);
      headers.push_back(std::move(h));
      continue;
    }
    if (l.tokens[0].label_like() &&
        (l.tokens[0].is("algebra") || l.tokens[0].is("elements"))) {
      fail(l.tokens[0], "unexpected '" + l.tokens[0].text + "'");
    }
    if (headers.empty()) {
      fail(l.tokens[0], "expected 'op NAME/ARITY'");
    }
    read_table_row(l, headers.back(), u, tables.back());
  }
  for (std::size_t i = 0; i < headers.size(); ++i) {
    check_total(headers[i], u, tables[i]);
  }
  return FiniteAlgebra(std::move(name), Signature(std::move(ops)), n,
                       std::move(tables), u.labels);
}

std::string print_algebra(FiniteAlgebra const& a) {
  std::ostringstream os;
  os << "algebra " << quote(a.name()) << "\n";
  print_elements(os, a.labels());
  for (std::size_t i = 0; i < a.signature().size(); ++i) {
    auto const& op = a.signature()[i];
    os << "op " << op.name << "/" << op.arity << "\n";
    print_table(os, a.labels(), op.arity, a.table(i));
  }
  return os.str();
}

FiniteStructure parse_structure(std::string_view text) {
  auto const lines = tokenize(text);
  if (lines.empty()) {
    throw ParseError("empty document, expected 'structure NAME'", 1, 1);
  }
  FiniteStructure x;
  x.name = parse_header(lines[0], "structure");
  if (lines.size() < 2) {
    throw ParseError("expected 'elements' line", lines[0].number + 1, 1);
  }
  Universe const u = parse_elements(lines[1]);
  std::size_t const n = u.labels.size();
  x.size = n;
  x.labels = u.labels;

  struct Block {
    BlockHeader h;
    std::size_t index;  // into ops or relations
    std::vector<std::pair<Element, Element>> covers;
  };
  std::vector<Block> blocks;
  auto name_taken = [&](std::string const& nm) {
    return x.find_op(nm) || x.find_relation(nm);
  };

  for (std::size_t li = 2; li < lines.size(); ++li) {
    Line const& l = lines[li];
    if (looks_like_header(l)) {
      BlockHeader h = parse_block_header(l);
      if (name_taken(h.name)) {
        fail(l.tokens[1], "duplicate symbol '" + h.name + "'");
      }
      Block b{h, 0, {}};
      if (h.kind == "op" || h.kind == "partial") {
        b.index = x.ops.size();
        x.ops.push_back(
            {h.name, h.arity, h.kind == "partial",
             std::vector<Element>(ipow(n, h.arity), kUndefined)});
      } else {
        b.index = x.relations.size();
        x.relations.push_back(
            {h.name, h.arity, std::vector<std::uint8_t>(ipow(n, h.arity), 0)});
      }
      blocks.push_back(std::move(b));
      continue;
    }
    if (l.tokens[0].is("structure") || l.tokens[0].is("elements")) {
      fail(l.tokens[0], "unexpected '" + l.tokens[0].text + "'");
    }
    if (blocks.empty()) {
      fail(l.tokens[0], "expected an 'op', 'partial', 'relation' or 'order' "
                        "header");
    }
    Block& b = blocks.back();
    auto const& t = l.tokens;
    if (b.h.kind == "op" || b.h.kind == "partial") {
      read_table_row(l, b.h, u, x.ops[b.index].table);
    } else if (b.h.kind == "relation") {
      if (t.size() != static_cast<std::size_t>(b.h.arity)) {
        fail(t[0], "relation '" + b.h.name + "' has arity " +
                       std::to_string(b.h.arity) + " but the row has " +
                       std::to_string(t.size()) + " entries");
      }
      std::vector<Element> args;
      for (auto const& tok : t) {
        args.push_back(u.resolve(tok));
      }
      auto& cell = x.relations[b.index].holds[tuple_index(n, args)];
      if (cell) {
        fail(t[0], "duplicate tuple " + u.tuple_text(args) + " in '" +
                       b.h.name + "'");
      }
      cell = 1;
    } else {
      // a < b < c ...
      if (t.size() < 3 || t.size() % 2 == 0) {
        fail(t[0], "expected 'x < y' in order '" + b.h.name + "'");
      }
      for (std::size_t i = 1; i < t.size(); i += 2) {
        if (t[i].kind != Tok::lt) {
          fail(t[i], "expected '<'");
        }
      }
      for (std::size_t i = 0; i + 2 < t.size(); i += 2) {
        Element const lo = u.resolve(t[i]);
        Element const hi = u.resolve(t[i + 2]);
        if (lo == hi) {
          fail(t[i], "'" + t[i].text + " < " + t[i].text +
                         "' is not a strict covering pair");
        }
        b.covers.emplace_back(lo, hi);
      }
    }
  }

  for (auto const& b : blocks) {
    if (b.h.kind == "op") {
      check_total(b.h, u, x.ops[b.index].table);
    } else if (b.h.kind == "order") {
      auto& holds = x.relations[b.index].holds;
      for (std::size_t i = 0; i < n; ++i) {
        holds[i * n + i] = 1;
      }
      for (auto [lo, hi] : b.covers) {
        holds[lo * n + hi] = 1;
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          if (!holds[i * n + k]) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            holds[i * n + j] |= holds[k * n + j];
          }
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (holds[i * n + j] && holds[j * n + i]) {
            fail(b.h.at, "order '" + b.h.name + "' is not antisymmetric: " +
                             u.labels[i] + " and " + u.labels[j] +
                             " lie below each other");
          }
        }
      }
    }
  }
  return x;
}

std::string print_structure(FiniteStructure const& x) {
  std::ostringstream os;
  os << "structure " << quote(x.name) << "\n";
  print_elements(os, x.labels);
  for (auto const& op : x.ops) {
    os << (op.partial ? "partial " : "op ") << op.name << "/" << op.arity
       << "\n";
    print_table(os, x.labels, op.arity, op.table);
  }
  for (auto const& r : x.relations) {
    os << "relation " << r.name << "/" << r.arity << "\n";
    std::vector<Element> args(static_cast<std::size_t>(r.arity));
    for (std::size_t i = 0; i < r.holds.size(); ++i) {
      if (!r.holds[i]) {
        continue;
      }
      decode(i, x.size, args);
      os << " ";
      for (Element a : args) {
        os << " " << quote(x.labels[a]);
      }
      os << "\n";
    }
  }
  return os.str();
}

Term parse_term(std::string_view text, Signature const& sig) {
  return TermParser(text, sig, 1, 1).whole_term();
}

std::string print_term(Term const& t) {
  if (t.is_variable()) {
    return "x" + std::to_string(t.var());
  }
  if (t.args().empty()) {
    return is_variable_name(t.op()) ? t.op() + "()" : t.op();
  }
  std::string s = t.op() + "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    s += (i ? ", " : "") + print_term(t.args()[i]);
  }
  return s + ")";
}

QuasiIdentity parse_quasi_identity(std::string_view text,
                                   Signature const& sig) {
  return TermParser(text, sig, 1, 1).quasi_identity();
}

std::string print_quasi_identity(QuasiIdentity const& q) {
  std::string s;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    s += (i ? ", " : "") + print_term(q.premises[i].lhs) + " = " +
         print_term(q.premises[i].rhs);
  }
  s += s.empty() ? "=> " : " => ";
  return s + print_term(q.conclusion.lhs) + " = " +
         print_term(q.conclusion.rhs);
}

std::vector<QuasiIdentity> parse_quasi_identities(std::string_view text,
                                                  Signature const& sig) {
  std::vector<QuasiIdentity> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    ++line;
    std::string_view s = text.substr(pos, eol - pos);
    if (auto h = s.find('#'); h != std::string_view::npos) {
      s = s.substr(0, h);
    }
    if (s.find_first_not_of(" \t\r") != std::string_view::npos) {
      out.push_back(TermParser(s, sig, line, 1).quasi_identity());
    }
    pos = eol + 1;
  }
  return out;
}

std::string print_quasi_identities(std::vector<QuasiIdentity> const& qs) {
  std::string s;
  for (auto const& q : qs) {
    s += print_quasi_identity(q) + "\n";
  }
  return s;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace admit
