#include <fstream>
#include <functional>
#include <sstream>

#include "gcalc/gcm.hpp"

namespace gcalc {

namespace {

struct Cursor {
  const std::string& s;
  int line;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& code, const std::string& msg) {
    throw ParseError(code, line, int(pos) + 1, msg);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      fail("E_SYNTAX", std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(uint8_t(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("E_SYNTAX", "expected a name");
    return s.substr(start, pos - start);
  }
  // signed integer
  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) ++pos;
    if (pos == digits) fail("E_SYNTAX", "expected an integer");
    return std::stol(s.substr(start, pos - start));
  }
  // unsigned rational literal p or p/q (no spaces inside)
  Rational rational_lit() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) ++pos;
    if (pos == start) fail("E_SYNTAX", "expected a number");
    if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
        std::isdigit(uint8_t(s[pos + 1]))) {
      ++pos;
      while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) ++pos;
    }
    return rational_from_string(s.substr(start, pos - start));
  }
};

// factor := name ['^' signed-int]; term := [rational] {'*' factor} ...
SuperPolynomial parse_poly_cursor(const ChartPtr& chart, Cursor& c) {
  SuperPolynomial out = SuperPolynomial::zero(chart);
  bool first = true;
  while (true) {
    if (c.eof()) {
      if (first) c.fail("E_SYNTAX", "empty polynomial");
      break;
    }
    int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (c.accept('+'))
      sign = 1;
    else if (!first)
      break;  // caller handles what follows
    Rational coeff(sign);
    bool have_any = false;
    std::vector<std::pair<uint32_t, int64_t>> exps;
    if (std::isdigit(uint8_t(c.peek()))) {
      coeff *= c.rational_lit();
      have_any = true;
    }
    while (true) {
      if (have_any) {
        if (!c.accept('*')) break;
      }
      if (!std::isalpha(uint8_t(c.peek())) && c.peek() != '_') {
        if (have_any) c.fail("E_SYNTAX", "expected a generator after '*'");
        break;
      }
      size_t at = c.pos;
      std::string name = c.ident();
      auto idx = chart->find(name);
      if (!idx) {
        c.pos = at;
        c.fail("E_SEMANTIC", "unknown generator: " + name);
      }
      long e = 1;
      if (c.accept('^')) e = c.integer();
      exps.push_back({*idx, e});
      have_any = true;
    }
    if (!have_any) c.fail("E_SYNTAX", "expected a term");
    out = out + SuperPolynomial::term(chart, coeff, exps);
    first = false;
  }
  return out;
}

struct Line {
  int number;
  std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t\r");
    lines.push_back({n, raw.substr(a, b - a + 1)});
  }
  return lines;
}

class GcmParser {
 public:
  explicit GcmParser(const std::string& text) : lines_(split_lines(text)) {}

  StructureFile run() {
    StructureFile f;
    while (i_ < lines_.size()) {
      Cursor c{lines_[i_].text, lines_[i_].number};
      std::string head = c.ident();
      if (head == "chart") {
        expect_open(c);
        parse_chart(f);
      } else if (head == "lift") {
        parse_lift(f, c);
        ++i_;
      } else if (head == "oneform") {
        Parity p = parse_parity(c);
        expect_open(c);
        parse_oneform(f, p);
      } else if (head == "jacobi") {
        Parity p = parse_parity(c);
        expect_open(c);
        parse_jacobi(f, p);
      } else if (head == "hamiltonian") {
        expect_open(c);
        parse_hamiltonian(f);
      } else if (head == "courant") {
        expect_open(c);
        parse_courant(f);
      } else if (head == "section") {
        std::string name = c.ident();
        expect_open(c);
        parse_section(f, name);
      } else {
        c.fail("E_SYNTAX", "unknown block: " + head);
      }
    }
    if (!f.declared_chart && !f.courant)
      throw ParseError("E_SEMANTIC", 1, 1,
                       "file declares no chart and no courant block");
    return f;
  }

 private:
  std::vector<Line> lines_;
  size_t i_ = 0;

  void expect_open(Cursor& c) {
    c.expect('{');
    if (!c.eof()) c.fail("E_SYNTAX", "trailing input after '{'");
    ++i_;
  }
  bool at_close() {
    return i_ < lines_.size() && lines_[i_].text == "}";
  }
  Line& need_line(const char* what) {
    if (i_ >= lines_.size())
      throw ParseError("E_SYNTAX", lines_.empty() ? 1 : lines_.back().number,
                       1, std::string("unterminated ") + what);
    return lines_[i_];
  }
  static Parity parse_parity(Cursor& c) {
    std::string p = c.ident();
    if (p == "even") return Parity::Even;
    if (p == "odd") return Parity::Odd;
    c.fail("E_SYNTAX", "expected 'even' or 'odd', got " + p);
  }

  void require_chart(const StructureFile& f, Cursor& c) {
    if (!f.chart) c.fail("E_SEMANTIC", "block requires a chart declaration");
  }

  void parse_chart(StructureFile& f) {
    std::vector<Generator> gens;
    std::optional<size_t> dim;
    std::optional<uint32_t> t_index;
    while (!at_close()) {
      Line& ln = need_line("chart block");
      Cursor c{ln.text, ln.number};
      Generator g;
      g.name = c.ident();
      g.parity = parse_parity(c);
      while (!c.eof() && (std::isdigit(uint8_t(c.peek())) ||
                          c.peek() == '-' || c.peek() == '+'))
        g.weight.push_back(c.integer());
      while (!c.eof()) {
        std::string kw = c.ident();
        if (kw == "invertible")
          g.invertible = true;
        else if (kw == "fiber") {
          g.invertible = true;
          t_index = uint32_t(gens.size());
        } else
          c.fail("E_SYNTAX", "unknown generator attribute: " + kw);
      }
      if (!dim)
        dim = g.weight.size();
      else if (*dim != g.weight.size())
        c.fail("E_SEMANTIC", "inconsistent weight length for " + g.name);
      gens.push_back(std::move(g));
      ++i_;
    }
    need_line("chart block");
    ++i_;  // consume '}'
    if (gens.empty())
      throw ParseError("E_SEMANTIC", lines_[i_ - 1].number, 1,
                       "empty chart");
    try {
      f.declared_chart = Chart::make(std::move(gens), dim.value_or(0),
                                     t_index);
    } catch (const DomainError& e) {
      throw ParseError("E_SEMANTIC", lines_[i_ - 1].number, 1, e.what());
    }
    f.chart = f.declared_chart;
  }

  void parse_lift(StructureFile& f, Cursor& c) {
    require_chart(f, c);
    LiftStep step;
    std::string kind = c.ident();
    if (kind == "cotangent")
      step.kind = LiftStep::Cotangent;
    else if (kind == "tangent")
      step.kind = LiftStep::Tangent;
    else if (kind == "fiber")
      step.kind = LiftStep::Fiber;
    else
      c.fail("E_SYNTAX", "unknown lift kind: " + kind);
    while (!c.eof()) {
      std::string kw = c.ident();
      if (kw == "reversed") {
        step.reversed = true;
      } else if (kw == "r") {
        c.expect('=');
        step.r = c.integer();
      } else {
        c.fail("E_SYNTAX", "unknown lift attribute: " + kw);
      }
    }
    try {
      switch (step.kind) {
        case LiftStep::Cotangent:
          f.chart = cotangent_lift_chart(f.chart, step.r, step.reversed);
          break;
        case LiftStep::Tangent:
          f.chart = tangent_lift_chart(f.chart, step.reversed);
          break;
        case LiftStep::Fiber:
          f.chart = extend_with_fiber(f.chart);
          break;
      }
    } catch (const DomainError& e) {
      c.fail("E_SEMANTIC", e.what());
    }
    f.lifts.push_back(step);
  }

  // lines "gen : poly" inside a block; returns map
  std::map<std::string, std::pair<int, std::string>> key_lines(
      const char* what) {
    std::map<std::string, std::pair<int, std::string>> out;
    while (!at_close()) {
      Line& ln = need_line(what);
      Cursor c{ln.text, ln.number};
      std::string key = c.ident();
      // keys may carry indices ("rho 1", "A 1 2 3")
      while (!c.eof() && c.peek() != ':') {
        c.skip_ws();
        size_t start = c.pos;
        while (c.pos < c.s.size() && c.s[c.pos] != ':' && c.s[c.pos] != ' ' &&
               c.s[c.pos] != '\t')
          ++c.pos;
        key += " " + c.s.substr(start, c.pos - start);
      }
      c.expect(':');
      c.skip_ws();
      if (out.count(key))
        c.fail("E_SEMANTIC", "duplicate entry: " + key);
      out.emplace(key,
                  std::make_pair(ln.number, c.s.substr(c.pos)));
      ++i_;
    }
    need_line(what);
    ++i_;
    return out;
  }

  SuperPolynomial poly_of(const ChartPtr& chart, int line,
                          const std::string& text) {
    Cursor c{text, line};
    SuperPolynomial p = parse_poly_cursor(chart, c);
    if (!c.eof()) c.fail("E_SYNTAX", "trailing input after polynomial");
    return p;
  }

  std::vector<SuperPolynomial> poly_list(const ChartPtr& chart, int line,
                                         const std::string& text,
                                         size_t want) {
    std::vector<SuperPolynomial> out;
    Cursor c{text, line};
    while (true) {
      out.push_back(parse_poly_cursor(chart, c));
      if (!c.accept(',')) break;
    }
    if (!c.eof()) c.fail("E_SYNTAX", "trailing input after polynomial list");
    if (out.size() != want)
      c.fail("E_SEMANTIC", "expected " + std::to_string(want) +
                               " components, got " +
                               std::to_string(out.size()));
    return out;
  }

  void parse_oneform(StructureFile& f, Parity parity) {
    if (!f.chart)
      throw ParseError("E_SEMANTIC", lines_[i_ - 1].number, 1,
                       "oneform requires a chart");
    auto entries = key_lines("oneform block");
    std::vector<SuperPolynomial> coeffs(f.chart->size(),
                                        SuperPolynomial::zero(f.chart));
    for (const auto& [key, val] : entries) {
      auto idx = f.chart->find(key);
      if (!idx)
        throw ParseError("E_SEMANTIC", val.first, 1,
                         "unknown generator in oneform: " + key);
      coeffs[*idx] = poly_of(f.chart, val.first, val.second);
    }
    f.oneform = OneForm::make(f.chart, std::move(coeffs), parity);
  }

  void parse_jacobi(StructureFile& f, Parity parity) {
    if (!f.chart)
      throw ParseError("E_SEMANTIC", lines_[i_ - 1].number, 1,
                       "jacobi requires a chart");
    int open_line = lines_[i_ - 1].number;
    auto entries = key_lines("jacobi block");
    ChartPtr lifted =
        cotangent_lift_chart(f.chart, 1, parity == Parity::Even);
    SuperPolynomial l = SuperPolynomial::zero(lifted),
                    g = SuperPolynomial::zero(lifted),
                    ff = SuperPolynomial::zero(lifted);
    for (const auto& [key, val] : entries) {
      if (key == "lambda")
        l = poly_of(lifted, val.first, val.second);
      else if (key == "gamma")
        g = poly_of(lifted, val.first, val.second);
      else if (key == "f")
        ff = poly_of(lifted, val.first, val.second);
      else
        throw ParseError("E_SEMANTIC", val.first, 1,
                         "unknown jacobi entry: " + key);
    }
    try {
      f.jacobi = JacobiTriple::make(f.chart, parity, l, g, ff);
      f.jacobi_parity = parity;
    } catch (const DomainError& e) {
      throw ParseError("E_SEMANTIC", open_line, 1, e.what());
    }
  }

  void parse_hamiltonian(StructureFile& f) {
    if (!f.chart)
      throw ParseError("E_SEMANTIC", lines_[i_ - 1].number, 1,
                       "hamiltonian requires a chart");
    auto entries = key_lines("hamiltonian block");
    for (const auto& [key, val] : entries) {
      if (key == "h")
        f.hamiltonian = poly_of(f.chart, val.first, val.second);
      else
        throw ParseError("E_SEMANTIC", val.first, 1,
                         "unknown hamiltonian entry: " + key);
    }
    if (!f.hamiltonian)
      throw ParseError("E_SEMANTIC", lines_[i_ - 1].number, 1,
                       "hamiltonian block without h");
  }

  void parse_courant(StructureFile& f) {
    int open_line = lines_[i_ ? i_ - 1 : 0].number;
    auto entries = key_lines("courant block");
    auto get = [&](const std::string& k) -> const std::pair<int, std::string>* {
      auto it = entries.find(k);
      return it == entries.end() ? nullptr : &it->second;
    };
    const auto* pm = get("m");
    const auto* pq = get("q");
    if (!pm || !pq)
      throw ParseError("E_SEMANTIC", open_line, 1,
                       "courant block needs m and q");
    auto int_of = [&](const std::pair<int, std::string>& v) {
      Cursor c{v.second, v.first};
      long x = c.integer();
      if (!c.eof()) c.fail("E_SYNTAX", "trailing input");
      return x;
    };
    long m = int_of(*pm), q = int_of(*pq);
    if (m < 0 || q <= 0)
      throw ParseError("E_SEMANTIC", open_line, 1, "need m >= 0, q >= 1");
    std::vector<std::vector<Rational>> g(q, std::vector<Rational>(q, 0));
    const auto* pg = get("g");
    if (!pg)
      throw ParseError("E_SEMANTIC", open_line, 1, "courant block needs g");
    {
      Cursor c{pg->second, pg->first};
      for (long i = 0; i < q; ++i) {
        for (long j = 0; j < q; ++j) {
          int sign = c.accept('-') ? -1 : 1;
          g[i][j] = c.rational_lit() * sign;
        }
        if (i + 1 < q) c.expect(';');
      }
      if (!c.eof()) c.fail("E_SYNTAX", "trailing input after g rows");
    }
    CourantSpec spec = CourantSpec::zero(size_t(m), size_t(q), std::move(g));
    for (const auto& [key, val] : entries) {
      Cursor kc{key, val.first};
      std::string head = kc.ident();
      if (head == "m" || head == "q" || head == "g") continue;
      if (head == "rho") {
        long i = kc.integer();
        if (i < 1 || i > q)
          throw ParseError("E_SEMANTIC", val.first, 1, "rho index range");
        spec.r_coef[i - 1] =
            poly_list(spec.base, val.first, val.second, size_t(m));
      } else if (head == "rs") {
        long i = kc.integer();
        if (i < 1 || i > q)
          throw ParseError("E_SEMANTIC", val.first, 1, "rs index range");
        spec.r_scalar[i - 1] = poly_of(spec.base, val.first, val.second);
      } else if (head == "A") {
        long i = kc.integer(), j = kc.integer(), k = kc.integer();
        if (i < 1 || j < 1 || k < 1 || i > q || j > q || k > q)
          throw ParseError("E_SEMANTIC", val.first, 1, "A index range");
        if (i == j || j == k || i == k)
          throw ParseError("E_SEMANTIC", val.first, 1,
                           "A entries need distinct indices");
        SuperPolynomial v = poly_of(spec.base, val.first, val.second);
        size_t a = size_t(i - 1), b = size_t(j - 1), cc = size_t(k - 1);
        spec.a[a][b][cc] = v;
        spec.a[b][cc][a] = v;
        spec.a[cc][a][b] = v;
        spec.a[b][a][cc] = -v;
        spec.a[a][cc][b] = -v;
        spec.a[cc][b][a] = -v;
      } else {
        throw ParseError("E_SEMANTIC", val.first, 1,
                         "unknown courant entry: " + key);
      }
    }
    try {
      spec.validate();
    } catch (const DomainError& e) {
      throw ParseError("E_SEMANTIC", open_line, 1, e.what());
    }
    f.courant = std::move(spec);
  }

  void parse_section(StructureFile& f, const std::string& name) {
    if (!f.chart)
      throw ParseError("E_SEMANTIC", lines_[i_ - 1].number, 1,
                       "section requires a chart");
    int open_line = lines_[i_ - 1].number;
    for (const auto& g : f.chart->generators())
      if (g.parity == Parity::Odd || g.invertible)
        throw ParseError("E_SEMANTIC", open_line, 1,
                         "sections need a purely even polynomial base");
    auto entries = key_lines("section block");
    WadeSection s = WadeSection::zero(f.chart);
    for (const auto& [key, val] : entries) {
      if (key == "X")
        s.vec = poly_list(f.chart, val.first, val.second, f.chart->size());
      else if (key == "f")
        s.f = poly_of(f.chart, val.first, val.second);
      else if (key == "alpha")
        s.form = poly_list(f.chart, val.first, val.second, f.chart->size());
      else if (key == "g")
        s.g = poly_of(f.chart, val.first, val.second);
      else
        throw ParseError("E_SEMANTIC", val.first, 1,
                         "unknown section entry: " + key);
    }
    if (f.sections.count(name))
      throw ParseError("E_SEMANTIC", open_line, 1,
                       "duplicate section: " + name);
    f.sections.emplace(name, std::move(s));
  }
};

}  // namespace

SuperPolynomial parse_polynomial(const ChartPtr& chart,
                                 const std::string& text) {
  Cursor c{text, 1};
  SuperPolynomial p = parse_poly_cursor(chart, c);
  if (!c.eof()) c.fail("E_SYNTAX", "trailing input after polynomial");
  return p;
}

StructureFile parse_gcm(const std::string& text) {
  return GcmParser(text).run();
}

StructureFile parse_gcm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_gcm(ss.str());
}

namespace {

std::string parity_word(Parity p) {
  return p == Parity::Odd ? "odd" : "even";
}

}  // namespace

std::string StructureFile::print() const {
  std::ostringstream os;
  if (declared_chart) {
    os << "chart {\n";
    for (uint32_t i = 0; i < declared_chart->size(); ++i) {
      const Generator& g = declared_chart->gen(i);
      os << "  " << g.name << " " << parity_word(g.parity);
      for (long w : g.weight) os << " " << w;
      if (declared_chart->distinguished_t() &&
          *declared_chart->distinguished_t() == i)
        os << " fiber";
      else if (g.invertible)
        os << " invertible";
      os << "\n";
    }
    os << "}\n";
  }
  for (const auto& l : lifts) {
    os << "lift ";
    switch (l.kind) {
      case LiftStep::Cotangent:
        os << "cotangent";
        if (l.reversed) os << " reversed";
        os << " r=" << l.r;
        break;
      case LiftStep::Tangent:
        os << "tangent";
        if (l.reversed) os << " reversed";
        break;
      case LiftStep::Fiber:
        os << "fiber";
        break;
    }
    os << "\n";
  }
  if (oneform) {
    os << "oneform " << parity_word(oneform->declared_parity) << " {\n";
    for (uint32_t i = 0; i < oneform->coeffs.size(); ++i)
      if (!oneform->coeffs[i].is_zero())
        os << "  " << chart->gen(i).name << " : "
           << oneform->coeffs[i].to_string() << "\n";
    os << "}\n";
  }
  if (jacobi) {
    os << "jacobi " << parity_word(jacobi->structure_parity()) << " {\n";
    if (!jacobi->lambda().is_zero())
      os << "  lambda : " << jacobi->lambda().to_string() << "\n";
    if (!jacobi->gamma().is_zero())
      os << "  gamma : " << jacobi->gamma().to_string() << "\n";
    if (!jacobi->f().is_zero())
      os << "  f : " << jacobi->f().to_string() << "\n";
    os << "}\n";
  }
  if (hamiltonian)
    os << "hamiltonian {\n  h : " << hamiltonian->to_string() << "\n}\n";
  if (courant) {
    const CourantSpec& s = *courant;
    os << "courant {\n  m : " << s.m << "\n  q : " << s.q << "\n  g : ";
    for (size_t i = 0; i < s.q; ++i) {
      if (i) os << " ; ";
      for (size_t j = 0; j < s.q; ++j) {
        if (j) os << " ";
        os << to_string(s.g[i][j]);
      }
    }
    os << "\n";
    for (size_t i = 0; i < s.q; ++i) {
      bool nonzero = false;
      for (const auto& p : s.r_coef[i]) nonzero |= !p.is_zero();
      if (nonzero) {
        os << "  rho " << i + 1 << " : ";
        for (size_t a = 0; a < s.m; ++a) {
          if (a) os << ", ";
          os << s.r_coef[i][a].to_string();
        }
        os << "\n";
      }
      if (!s.r_scalar[i].is_zero())
        os << "  rs " << i + 1 << " : " << s.r_scalar[i].to_string() << "\n";
    }
    for (size_t i = 0; i < s.q; ++i)
      for (size_t j = i + 1; j < s.q; ++j)
        for (size_t k = j + 1; k < s.q; ++k)
          if (!s.a[i][j][k].is_zero())
            os << "  A " << i + 1 << " " << j + 1 << " " << k + 1 << " : "
               << s.a[i][j][k].to_string() << "\n";
    os << "}\n";
  }
  for (const auto& [name, s] : sections) {
    os << "section " << name << " {\n";
    auto list = [&](const char* key, const std::vector<SuperPolynomial>& v) {
      os << "  " << key << " : ";
      for (size_t a = 0; a < v.size(); ++a) {
        if (a) os << ", ";
        os << v[a].to_string();
      }
      os << "\n";
    };
    list("X", s.vec);
    os << "  f : " << s.f.to_string() << "\n";
    list("alpha", s.form);
    os << "  g : " << s.g.to_string() << "\n";
    os << "}\n";
  }
  return os.str();
}

}  // namespace gcalc
