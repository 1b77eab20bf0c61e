#include "hkr/textio.hpp"

#include <cctype>
#include <sstream>

namespace hkr {

namespace {

struct Token {
  enum Type { Int, Pipe, Semi } type;
  int value;
  int col;
};

struct Group {
  std::vector<int> values;
  int col;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/* splits a line into whitespace-separated words with 1-based start columns */
std::vector<std::pair<std::string, int>> words(const std::string& s) {
  std::vector<std::pair<std::string, int>> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i >= s.size()) break;
    size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    out.push_back({s.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int parse_int(const std::string& w, int line, int col, const char* what) {
  if (w.empty()) throw ParseError(std::string("expected ") + what, line, col);
  for (size_t i = 0; i < w.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(w[i])))
      throw ParseError(std::string("expected ") + what + ", found '" + w + "'", line, col + static_cast<int>(i));
  if (w.size() > 9) throw ParseError(std::string(what) + " too large", line, col);
  return std::stoi(w);
}

std::vector<Token> tokenize(const std::string& s, int line, int offset) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = offset + static_cast<int>(i);
    if (is_space(c)) {
      ++i;
    } else if (c == '|') {
      out.push_back({Token::Pipe, 0, col});
      ++i;
    } else if (c == ';') {
      out.push_back({Token::Semi, 0, col});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Int, parse_int(s.substr(i, j - i), line, col, "integer"), col});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  return out;
}

/* groups split at separators; seps[i] is the separator after groups[i] */
void split_groups(const std::vector<Token>& toks, int line_start_col, std::vector<Group>& groups,
                  std::vector<Token>& seps) {
  groups.push_back({{}, line_start_col});
  for (const auto& t : toks) {
    if (t.type == Token::Int) {
      if (groups.back().values.empty()) groups.back().col = t.col;
      groups.back().values.push_back(t.value);
    } else {
      seps.push_back(t);
      groups.push_back({{}, t.col + 1});
    }
  }
}

void expect_len(const Group& g, int len, int line, const char* what) {
  if (static_cast<int>(g.values.size()) != len)
    throw ParseError("expected " + std::to_string(len) + " " + what + ", found " +
                         std::to_string(g.values.size()),
                     line, g.col);
}

std::vector<int> wedge_indices(const Group& g, int n, int line) {
  std::vector<int> out;
  for (int v : g.values) {
    if (v < 1 || v > n)
      throw ParseError("index " + std::to_string(v) + " outside 1.." + std::to_string(n), line, g.col);
    out.push_back(v - 1);
  }
  return out;
}

void expect_seps(const std::vector<Token>& seps, const std::vector<Token::Type>& want, int line,
                 int end_col) {
  for (size_t i = 0; i < seps.size() && i < want.size(); ++i)
    if (seps[i].type != want[i])
      throw ParseError(want[i] == Token::Pipe ? "expected '|'" : "expected ';'", line, seps[i].col);
  if (seps.size() > want.size()) throw ParseError("too many groups", line, seps[want.size()].col);
  if (seps.size() < want.size())
    throw ParseError("expected " + std::to_string(want.size() + 1) + " groups, found " +
                         std::to_string(seps.size() + 1),
                     line, end_col);
}

std::string join(const std::vector<int>& v, int shift = 0) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i] + shift);
  }
  return s;
}

}  // namespace

std::vector<std::pair<std::string, Scalar>> element_entries(const Element& e) {
  std::vector<std::pair<std::string, Scalar>> out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SymElement>) {
          for (const auto& [k, c] : x) out.push_back({join(k), c});
        } else if constexpr (std::is_same_v<T, ExtElement>) {
          for (const auto& [k, c] : x) out.push_back({join(k.idx, 1), c});
        } else if constexpr (std::is_same_v<T, BarChain>) {
          for (const auto& [k, c] : x) {
            std::string s;
            for (size_t i = 0; i < k.size(); ++i) s += (i ? " | " : "") + join(k[i]);
            out.push_back({s, c});
          }
        } else if constexpr (std::is_same_v<T, KoszulChain>) {
          for (const auto& [k, c] : x)
            out.push_back({join(k.a) + " | " + join(k.b) + " |" + (k.u.idx.empty() ? "" : " " + join(k.u.idx, 1)), c});
        } else if constexpr (std::is_same_v<T, Tensor>) {
          for (const auto& [k, c] : x.coef)
            if (sgn(c) != 0) out.push_back({join(k, 1), c});
        } else {
          for (const auto& [t, c] : x) {
            const auto& k = t.second;
            out.push_back({join(t.first) + " ; " + join(k.a) + " | " + join(k.b) + " |" +
                               (k.u.idx.empty() ? "" : " " + join(k.u.idx, 1)),
                           c});
          }
        }
      },
      e.value);
  return out;
}

std::string kind_name(const Element& e) {
  static const char* names[] = {"sym", "ext", "bar", "koszul", "tensor", "tpoly"};
  return names[e.value.index()];
}

Element make_element(const SymElement& x) { return {x.dim, 0, x}; }
/* exterior elements carry no level; the arity is read off the terms */
Element make_element(const ExtElement& x) {
  int k = x.begin() == x.end() ? 0 : static_cast<int>(x.begin()->first.idx.size());
  for (const auto& [m, c] : x)
    if (static_cast<int>(m.idx.size()) != k) throw std::invalid_argument("ext element is not homogeneous");
  return {x.dim, k, x};
}
Element make_element(const BarChain& x) { return {x.dim, x.level, x}; }
Element make_element(const KoszulChain& x) { return {x.dim, x.level, x}; }
Element make_element(const Tensor& x) { return {x.dim, x.rank, x}; }
Element make_element(const TPoly<KoszulKey>& x) { return {x.dim, x.level, x}; }

Element parse_element(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    lines.push_back(cur);
  }
  Element e;
  std::string kind;
  bool have_header = false;
  int tvars = -1;

  for (size_t li = 0; li < lines.size(); ++li) {
    int line = static_cast<int>(li) + 1;
    std::string s = lines[li];
    if (auto h = s.find('#'); h != std::string::npos) s.resize(h);
    if (words(s).empty()) continue;

    if (!have_header) {
      auto w = words(s);
      kind = w[0].first;
      if (kind != "sym" && kind != "ext" && kind != "bar" && kind != "koszul" && kind != "tensor" &&
          kind != "tpoly")
        throw ParseError("unknown kind '" + kind + "'", line, w[0].second);
      if (w.size() < 3)
        throw ParseError("header needs: kind dim arity", line, static_cast<int>(s.size()) + 1);
      if (w.size() > 3) throw ParseError("unexpected text after header", line, w[3].second);
      e.dim = parse_int(w[1].first, line, w[1].second, "dimension");
      if (e.dim < 1) throw ParseError("dimension must be positive", line, w[1].second);
      e.arity = parse_int(w[2].first, line, w[2].second, "arity");
      if (kind == "sym" && e.arity != 0) throw ParseError("sym elements have arity 0", line, w[2].second);
      if (kind == "sym") e.value = SymElement(e.dim);
      if (kind == "ext") e.value = ExtElement(e.dim);
      if (kind == "bar") e.value = BarChain(e.dim, e.arity);
      if (kind == "koszul") e.value = KoszulChain(e.dim, e.arity);
      if (kind == "tensor") e.value = Tensor{e.dim, e.arity, {}};
      if (kind == "tpoly") e.value = TPoly<KoszulKey>(0, e.dim, e.arity);
      have_header = true;
      continue;
    }

    size_t colon = s.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected ':' before the coefficient", line, static_cast<int>(s.size()) + 1);
    std::string rhs = s.substr(colon + 1);
    auto rw = words(rhs);
    int rhs_col = static_cast<int>(colon) + 2;
    if (rw.empty()) throw ParseError("missing coefficient", line, rhs_col);
    if (rw.size() > 1) throw ParseError("unexpected text after coefficient", line, rhs_col + rw[1].second - 1);
    Scalar coef;
    try {
      coef = parse_scalar(rw[0].first);
    } catch (const ScalarParseError& err) {
      throw ParseError(err.what(), line, rhs_col + rw[0].second - 1 + static_cast<int>(err.offset));
    }

    auto toks = tokenize(s.substr(0, colon), line, 1);
    std::vector<Group> groups;
    std::vector<Token> seps;
    split_groups(toks, 1, groups, seps);
    int end_col = static_cast<int>(colon) + 1;
    int n = e.dim, k = e.arity;

    if (kind == "sym") {
      expect_seps(seps, {}, line, end_col);
      expect_len(groups[0], n, line, "exponents");
      std::get<SymElement>(e.value).add(groups[0].values, coef);
    } else if (kind == "ext" || kind == "tensor") {
      expect_seps(seps, {}, line, end_col);
      expect_len(groups[0], k, line, "indices");
      auto idx = wedge_indices(groups[0], n, line);
      if (kind == "ext")
        std::get<ExtElement>(e.value) += ext_basis(n, idx, coef);
      else
        std::get<Tensor>(e.value).coef[idx] += coef;
    } else if (kind == "bar") {
      expect_seps(seps, std::vector<Token::Type>(static_cast<size_t>(k + 1), Token::Pipe), line, end_col);
      BarKey key;
      for (const auto& g : groups) {
        expect_len(g, n, line, "exponents");
        key.push_back(g.values);
      }
      std::get<BarChain>(e.value).add(key, coef);
    } else {
      size_t off = 0;
      std::vector<int> texp;
      if (kind == "tpoly") {
        expect_seps(seps, {Token::Semi, Token::Pipe, Token::Pipe}, line, end_col);
        texp = groups[0].values;
        if (tvars < 0) {
          if (texp.empty()) throw ParseError("expected at least one t-exponent", line, groups[0].col);
          tvars = static_cast<int>(texp.size());
          auto& tp = std::get<TPoly<KoszulKey>>(e.value);
          TPoly<KoszulKey> fresh(tvars, n, k);
          fresh += tp;
          tp = fresh;
        }
        expect_len(groups[0], tvars, line, "t-exponents");
        off = 1;
      } else {
        expect_seps(seps, {Token::Pipe, Token::Pipe}, line, end_col);
      }
      expect_len(groups[off], n, line, "exponents");
      expect_len(groups[off + 1], n, line, "exponents");
      expect_len(groups[off + 2], k, line, "wedge indices");
      auto w = wedge_indices(groups[off + 2], n, line);
      KoszulChain c = koszul_basis(n, groups[off].values, groups[off + 1].values, w, coef);
      if (kind == "koszul") {
        std::get<KoszulChain>(e.value) += c;
      } else {
        auto& tp = std::get<TPoly<KoszulKey>>(e.value);
        for (const auto& [key, cc] : c) tp.add(texp, key, cc);
      }
    }
  }
  if (!have_header) throw ParseError("empty input, expected a header", 1, 1);
  return e;
}

std::string write_element(const Element& e) {
  std::ostringstream os;
  os << kind_name(e) << ' ' << e.dim << ' ' << e.arity << '\n';
  for (const auto& [lhs, c] : element_entries(e)) os << lhs << (lhs.empty() ? ": " : " : ") << format_scalar(c) << '\n';
  return os.str();
}

std::string inline_text(const Element& e) {
  auto es = element_entries(e);
  if (es.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < es.size(); ++i) {
    if (i) s += ", ";
    s += "(" + es[i].first + "):" + format_scalar(es[i].second);
  }
  return s;
}

}  // namespace hkr
