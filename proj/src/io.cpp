#include "iipm/io.hpp"

#include <istream>
#include <sstream>

namespace iipm {

namespace {

const char* kMagic = "%IIPM v1";

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

/// "key=value" -> value, or a ParseError naming the expected key.
std::string expect_kv(const std::string& tok, const std::string& key, int line) {
  const std::string prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0 || tok.size() == prefix.size())
    throw ParseError(line, "expected " + key + "=<value>, got '" + tok + "'");
  return tok.substr(prefix.size());
}

uint64_t parse_uint(const std::string& text, int line) {
  if (text.empty()) throw ParseError(line, "empty integer");
  uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError(line, "bad integer '" + text + "'");
    v = v * 10 + uint64_t(c - '0');
    if (v > (uint64_t(1) << 32)) throw ParseError(line, "integer too large");
  }
  return v;
}

uint64_t parse_hex(const std::string& text, int line) {
  if (text.empty()) throw ParseError(line, "empty hex value");
  if (text.size() > 16) throw ParseError(line, "hex value too long");
  uint64_t v = 0;
  for (char c : text) {
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else throw ParseError(line, "bad hex digit '" + std::string(1, c) + "'");
    v = (v << 4) | uint64_t(digit);
  }
  return v;
}

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(uint8_t(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(uint8_t(c)) && c != '_') return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::istream& in) : in_(in) {}

  Document run() {
    expect_magic();
    parse_ring();

    while (next_line()) {
      const auto toks = tokenize(line_);
      if (toks.empty()) continue;
      if (toks[0] == "space") {
        parse_space(toks);
      } else if (toks[0] == "gram") {
        parse_gram(toks);
      } else if (toks[0] == "operator") {
        parse_operator(toks);
      } else if (toks[0] == "ring") {
        throw ParseError(lineno_, "duplicate ring directive");
      } else {
        throw ParseError(lineno_, "unknown directive '" + toks[0] + "'");
      }
    }
    finalize_space();
    return std::move(doc_);
  }

 private:
  bool next_line() {
    while (std::getline(in_, line_)) {
      ++lineno_;
      if (!tokenize(line_).empty()) return true;
    }
    return false;
  }

  void expect_magic() {
    if (!next_line() || line_ != kMagic)
      throw ParseError(lineno_ == 0 ? 1 : lineno_, "expected magic line '" + std::string(kMagic) + "'");
  }

  void parse_ring() {
    if (!next_line()) throw ParseError(lineno_ + 1, "expected ring directive");
    const auto toks = tokenize(line_);
    if (toks.empty() || toks[0] != "ring")
      throw ParseError(lineno_, "expected ring directive before anything else");
    if (toks.size() != 5) throw ParseError(lineno_, "ring needs: kind k= modulus= star=");

    RingSpec spec;
    if (toks[1] == "gf2k") spec.kind = RingKind::gf2k;
    else if (toks[1] == "quotient") spec.kind = RingKind::quotient;
    else throw ParseError(lineno_, "unknown ring kind '" + toks[1] + "'");

    spec.degree = unsigned(parse_uint(expect_kv(toks[2], "k", lineno_), lineno_));
    spec.modulus = parse_hex(expect_kv(toks[3], "modulus", lineno_), lineno_);

    const std::string star = expect_kv(toks[4], "star", lineno_);
    if (star == "identity") {
      spec.star = StarKind::identity;
    } else if (star.rfind("frobenius:", 0) == 0) {
      spec.star = StarKind::frobenius;
      spec.frobenius_power = unsigned(parse_uint(star.substr(10), lineno_));
    } else {
      throw ParseError(lineno_, "star must be identity or frobenius:<m>");
    }
    doc_.ring = make_ring(spec);  // ring invariant violations surface here
  }

  void parse_space(const std::vector<std::string>& toks) {
    if (dim_ >= 0) throw ParseError(lineno_, "duplicate space directive");
    if (!doc_.operators.empty()) throw ParseError(lineno_, "space must precede operators");
    if (toks.size() != 2) throw ParseError(lineno_, "space needs dim=<d>");
    dim_ = Index(parse_uint(expect_kv(toks[1], "dim", lineno_), lineno_));
    if (dim_ < 1) throw ParseError(lineno_, "dim must be positive");
  }

  void parse_gram(const std::vector<std::string>& toks) {
    if (toks.size() != 1) throw ParseError(lineno_, "gram takes no arguments");
    if (dim_ < 0) throw ParseError(lineno_, "gram requires a preceding space directive");
    if (gram_) throw ParseError(lineno_, "duplicate gram block");
    if (!doc_.operators.empty()) throw ParseError(lineno_, "gram must precede operators");
    gram_ = read_matrix();
  }

  void parse_operator(const std::vector<std::string>& toks) {
    if (toks.size() != 2) throw ParseError(lineno_, "operator needs name=<ident>");
    const std::string name = expect_kv(toks[1], "name", lineno_);
    if (!is_ident(name)) throw ParseError(lineno_, "bad operator name '" + name + "'");
    if (doc_.find(name)) throw ParseError(lineno_, "duplicate operator name '" + name + "'");
    if (dim_ < 0) {
      // No space block: the first operator fixes the dimension.
      const MatE m = read_matrix_infer_dim();
      dim_ = m.rows();
      finalize_space();
      doc_.operators.emplace_back(name, make_operator(*doc_.space, m));
      return;
    }
    finalize_space();
    doc_.operators.emplace_back(name, make_operator(*doc_.space, read_matrix()));
  }

  /// d rows of exactly d hex entries, d known.
  MatE read_matrix() {
    MatE m(dim_, dim_);
    for (Index i = 0; i < dim_; ++i) {
      if (!next_line()) throw ParseError(lineno_ + 1, "unexpected end of matrix block");
      const auto toks = tokenize(line_);
      if (Index(toks.size()) != dim_)
        throw ParseError(lineno_, "expected " + std::to_string(dim_) + " entries in matrix row");
      for (Index j = 0; j < dim_; ++j) m(i, j) = parse_elem(toks[size_t(j)]);
    }
    return m;
  }

  /// Square matrix block with the dimension inferred from the first row.
  MatE read_matrix_infer_dim() {
    if (!next_line()) throw ParseError(lineno_ + 1, "expected matrix block after operator");
    const auto first = tokenize(line_);
    const Index d = Index(first.size());
    MatE m(d, d);
    for (Index j = 0; j < d; ++j) m(0, j) = parse_elem(first[size_t(j)]);
    for (Index i = 1; i < d; ++i) {
      if (!next_line()) throw ParseError(lineno_ + 1, "unexpected end of matrix block");
      const auto toks = tokenize(line_);
      if (Index(toks.size()) != d)
        throw ParseError(lineno_, "expected " + std::to_string(d) + " entries in matrix row");
      for (Index j = 0; j < d; ++j) m(i, j) = parse_elem(toks[size_t(j)]);
    }
    return m;
  }

  Elem parse_elem(const std::string& tok) {
    return doc_.ring.element(parse_hex(tok, lineno_));  // MaskOutOfRange surfaces here
  }

  void finalize_space() {
    if (doc_.space || dim_ < 0) return;
    doc_.space = gram_ ? make_space(doc_.ring, dim_, *gram_)
                       : standard_space(doc_.ring, dim_);
  }

  std::istream& in_;
  std::string line_;
  int lineno_ = 0;
  Document doc_;
  Index dim_ = -1;
  std::optional<MatE> gram_;
};

void write_matrix(std::ostream& out, const MatE& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_hex(m(i, j));
    out << '\n';
  }
}

}  // namespace

const Operator* Document::find(const std::string& name) const {
  for (const auto& [n, op] : operators)
    if (n == name) return &op;
  return nullptr;
}

bool operator==(const Document& a, const Document& b) {
  if (a.ring != b.ring) return false;
  if (a.space.has_value() != b.space.has_value()) return false;
  if (a.space && !a.space->same_as(*b.space)) return false;
  if (a.operators.size() != b.operators.size()) return false;
  for (size_t i = 0; i < a.operators.size(); ++i)
    if (a.operators[i].first != b.operators[i].first ||
        a.operators[i].second != b.operators[i].second)
      return false;
  return true;
}

Document parse_document(std::istream& in) { return Parser(in).run(); }

Document parse_document(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in);
}

std::string serialize_document(const Document& doc) {
  std::ostringstream out;
  out << kMagic << '\n';
  out << "ring " << ring_directive(doc.ring) << '\n';
  if (doc.space) {
    out << "space dim=" << doc.space->dim() << '\n';
    out << "gram\n";
    write_matrix(out, doc.space->gram());
  }
  for (const auto& [name, op] : doc.operators) {
    out << "operator name=" << name << '\n';
    write_matrix(out, op.mat);
  }
  return out.str();
}

std::string ring_directive(Ring r) {
  const RingSpec& s = r.spec();
  std::string out = s.kind == RingKind::gf2k ? "gf2k" : "quotient";
  out += " k=" + std::to_string(s.degree);
  out += " modulus=" + to_hex(s.modulus);
  out += " star=";
  out += s.star == StarKind::identity ? "identity"
                                      : "frobenius:" + std::to_string(s.frobenius_power);
  return out;
}

std::string ring_csv_id(Ring r) {
  const RingSpec& s = r.spec();
  std::string out = s.kind == RingKind::gf2k ? "gf2k" : "quot";
  out += "_k" + std::to_string(s.degree);
  out += "_m" + to_hex(s.modulus);
  out += s.star == StarKind::identity ? "_sid" : "_sf" + std::to_string(s.frobenius_power);
  return out;
}

std::string mat_csv_id(const MatE& m) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (!out.empty()) out += '.';
      out += to_hex(m(i, j));
    }
  return out;
}

}  // namespace iipm
