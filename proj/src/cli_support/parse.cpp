#include "essdim/parse.hpp"

#include <cctype>
#include <map>

#include "essdim/clifford.hpp"

namespace essdim {

namespace {

class GroupParser {
 public:
  explicit GroupParser(const std::string& s) : s_(s) {}

  group::FiniteGroup parse() {
    skip_ws();
    group::FiniteGroup G = spec();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return G;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, "position " + std::to_string(pos_) + ": " + what + " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("expected a name");
    return s_.substr(start, pos_ - start);
  }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 1'000'000'000) error("number too large");
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
    }
    if (start == pos_) error("expected a number");
    return v;
  }

  // key=value list; a bare number is stored under the empty key.
  std::map<std::string, std::string> args() {
    std::map<std::string, std::string> out;
    do {
      skip_ws();
      const std::size_t at = pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        out[""] = std::to_string(number());
      } else {
        const std::string key = word();
        std::string value = "true";
        if (accept('=')) value = word();
        if (out.count(key)) {
          pos_ = at;
          error("duplicate key '" + key + "'");
        }
        out[key] = value;
      }
    } while (more_args());
    return out;
  }

  // A comma continues the argument list unless what follows starts a new
  // group spec (inside product:(...)).
  bool more_args() {
    const std::size_t before = pos_;
    if (!accept(',')) return false;
    skip_ws();
    std::size_t end = pos_;
    while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
    const std::string next = s_.substr(pos_, end - pos_);
    while (end < s_.size() && std::isspace(static_cast<unsigned char>(s_[end]))) ++end;
    const bool starts_spec = next == "trivial" || next == "Q8" || next == "quaternion" ||
                             (!next.empty() && !std::isdigit(static_cast<unsigned char>(next[0])) && end < s_.size() &&
                              s_[end] == ':');
    if (starts_spec) pos_ = before;
    return !starts_spec;
  }

  std::uint64_t get_num(std::map<std::string, std::string>& a, const std::string& key, std::size_t at,
                        const std::string& alt = "") {
    auto it = a.find(key);
    if (it == a.end() && !alt.empty()) it = a.find(alt);
    if (it == a.end()) {
      pos_ = at;
      error("missing parameter '" + key + "'");
    }
    std::uint64_t v = 0;
    for (char c : it->second) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || v > 1'000'000'000) {
        pos_ = at;
        error("parameter '" + key + "' must be a number");
      }
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    a.erase(it);
    return v;
  }

  void no_extra(const std::map<std::string, std::string>& a, std::size_t at) {
    if (!a.empty()) {
      pos_ = at;
      error("unknown parameter '" + (a.begin()->first.empty() ? a.begin()->second : a.begin()->first) + "'");
    }
  }

  unsigned small(std::uint64_t v, std::size_t at) {
    if (v > 64) {
      pos_ = at;
      error("parameter out of range");
    }
    return static_cast<unsigned>(v);
  }

  group::FiniteGroup spec() {
    const std::size_t at = pos_;
    const std::string name = word();
    if (name == "trivial") return group::cyclic(1);
    if (name == "Q8" || name == "quaternion") return group::quaternion8();
    if (name == "product") {
      expect(':');
      expect('(');
      group::FiniteGroup G = spec();
      while (accept(',')) G = group::direct_product(G, spec());
      expect(')');
      return G;
    }
    expect(':');
    const std::size_t args_at = pos_;
    auto a = args();
    auto G = [&]() -> group::FiniteGroup {
      if (name == "cyclic") return group::cyclic(get_num(a, "", args_at, "n"));
      if (name == "dihedral") return group::dihedral(get_num(a, "", args_at, "n"));
      if (name == "heisenberg") return group::heisenberg(get_num(a, "p", args_at, ""));
      if (name == "extraspecial") {
        const std::uint64_t p = get_num(a, "p", args_at);
        const unsigned m = small(get_num(a, "m", args_at), args_at);
        auto it = a.find("exp");
        if (it == a.end()) it = a.find("type");
        if (it == a.end()) {
          pos_ = args_at;
          error("missing parameter 'exp'");
        }
        static const std::map<std::string, group::ExtraspecialType> kTypes = {
            {"p", group::ExtraspecialType::ExponentP},  {"p2", group::ExtraspecialType::ExponentP2},
            {"D", group::ExtraspecialType::Dihedral},   {"Q", group::ExtraspecialType::Quaternion},
            {"I", group::ExtraspecialType::ExponentP},  {"II", group::ExtraspecialType::ExponentP2}};
        auto t = kTypes.find(it->second);
        if (t == kTypes.end()) {
          pos_ = args_at;
          error("exp must be one of p, p2, D, Q");
        }
        a.erase(it);
        no_extra(a, args_at);
        return group::extraspecial(p, m, t->second);
      }
      if (name == "semidirect") {
        const std::uint64_t p = get_num(a, "p", args_at);
        const unsigned r = small(get_num(a, "r", args_at), args_at);
        const unsigned s = small(get_num(a, "s", args_at), args_at);
        no_extra(a, args_at);
        return group::semidirect_cyclic(p, r, s);
      }
      if (name == "jly" || name == "jly_quotient") {
        const std::uint64_t p = get_num(a, "p", args_at);
        const unsigned n = small(get_num(a, "n", args_at), args_at);
        no_extra(a, args_at);
        return name == "jly" ? group::jly_group(p, n) : group::jly_quotient(p, n);
      }
      if (name == "gamma") {
        const unsigned n = small(get_num(a, "n", args_at, ""), args_at);
        bool full = false;
        if (auto it = a.find("full"); it != a.end()) {
          full = it->second == "true";
          a.erase(it);
        }
        if (auto it = a.find("even"); it != a.end()) {
          full = it->second == "false";
          a.erase(it);
        }
        no_extra(a, args_at);
        return clifford::gamma_group(n, !full);
      }
      pos_ = at;
      error("unknown group family '" + name + "'");
    }();
    no_extra(a, args_at);
    return G;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

group::FiniteGroup parse_group_spec(const std::string& s) { return GroupParser(s).parse(); }

std::uint64_t infer_prime(const group::FiniteGroup& G) {
  std::size_t n = G.order();
  if (n == 1) return 0;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (n % p == 0) return group::is_p_group(G, p) ? p : 0;
  return 0;
}

edim::FieldProfile parse_field_profile(const std::string& s) {
  edim::FieldProfile f;
  std::size_t pos = 0;
  auto error = [&](const std::string& what) -> void {
    fail(ErrorCode::ParseError, "position " + std::to_string(pos) + ": " + what + " in '" + s + "'");
  };
  auto parse_uint = [&](const std::string& t, std::size_t at) {
    std::uint64_t v = 0;
    if (t.empty()) {
      pos = at;
      error("expected a number");
    }
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || v > 1'000'000'000) {
        pos = at;
        error("expected a number");
      }
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };
  bool seen_char = false;
  while (pos < s.size()) {
    const std::size_t end = std::min(s.find(';', pos), s.size());
    const std::string seg = s.substr(pos, end - pos);
    const auto eq = seg.find('=');
    if (eq == std::string::npos) error("expected key=value");
    const std::string key = seg.substr(0, eq), value = seg.substr(eq + 1);
    const std::size_t value_at = pos + eq + 1;
    if (key == "char") {
      if (seen_char) error("duplicate char");
      seen_char = true;
      f.characteristic = parse_uint(value, value_at);
    } else if (key == "zeta48") {
      if (value != "true" && value != "false") {
        pos = value_at;
        error("zeta48 must be true or false");
      }
      f.two_adic_flag = value == "true";
    } else if (key.rfind("level(", 0) == 0 && key.back() == ')') {
      const std::uint64_t p = parse_uint(key.substr(6, key.size() - 7), pos + 6);
      if (!group::is_prime(p)) {
        pos += 6;
        error("level() needs a prime");
      }
      if (f.root_level.count(p)) error("duplicate level(" + std::to_string(p) + ")");
      f.root_level[p] = value == "inf" ? edim::FieldProfile::kInfiniteLevel
                                       : static_cast<std::int64_t>(parse_uint(value, value_at));
    } else {
      error("unknown key '" + key + "'");
    }
    pos = end + 1;
  }
  f.validate();
  return f;
}

}  // namespace essdim
