#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hopfmod/errors.hpp"

namespace hopfmod {

// Finite abelian group presented as a product of cyclic factors.  Elements
// are exponent tuples, enumerated mixed-radix with the first generator most
// significant; element 0 is the identity.
struct GroupPresentation {
  std::vector<std::string> gen_names;
  std::vector<int> orders;

  GroupPresentation() = default;
  GroupPresentation(std::vector<int> ords, std::vector<std::string> names = {})
      : gen_names(std::move(names)), orders(std::move(ords)) {
    for (int o : orders) require(o >= 1, Errc::InvalidN, "cyclic factor order must be positive");
    if (gen_names.empty()) {
      for (size_t i = 0; i < orders.size(); ++i) gen_names.push_back("g" + std::to_string(i + 1));
    }
    require(gen_names.size() == orders.size(), Errc::InvalidN,
            "generator name count must match order count");
  }

  int rank() const { return static_cast<int>(orders.size()); }

  int size() const {
    int n = 1;
    for (int o : orders) n *= o;
    return n;
  }

  std::vector<int> exponents(int idx) const {
    std::vector<int> e(orders.size());
    for (int i = rank() - 1; i >= 0; --i) {
      e[static_cast<size_t>(i)] = idx % orders[static_cast<size_t>(i)];
      idx /= orders[static_cast<size_t>(i)];
    }
    return e;
  }

  int index(const std::vector<int>& e) const {
    int idx = 0;
    for (size_t i = 0; i < orders.size(); ++i) {
      int v = ((e[i] % orders[i]) + orders[i]) % orders[i];
      idx = idx * orders[i] + v;
    }
    return idx;
  }

  int identity() const { return 0; }

  int mul(int a, int b) const {
    auto ea = exponents(a), eb = exponents(b);
    for (size_t i = 0; i < ea.size(); ++i) ea[i] += eb[i];
    return index(ea);
  }

  int inverse(int a) const {
    auto e = exponents(a);
    for (auto& x : e) x = -x;
    return index(e);
  }

  int pow(int a, int k) const {
    auto e = exponents(a);
    for (auto& x : e) x *= k;
    return index(e);
  }

  // index of the i-th generator
  int generator(int i) const {
    std::vector<int> e(orders.size(), 0);
    e[static_cast<size_t>(i)] = 1;
    return index(e);
  }

  std::string label(int idx) const {
    auto e = exponents(idx);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!first) os << "*";
      first = false;
      os << gen_names[i];
      if (e[i] > 1) os << "^" << e[i];
    }
    return first ? "1" : os.str();
  }

  // parse "1", "h", "g1*g2^2" back to an element index
  int element_from_label(const std::string& s) const {
    std::string t;
    for (char c : s)
      if (c != ' ') t += c;
    if (t == "1") return identity();
    std::vector<int> e(orders.size(), 0);
    size_t pos = 0;
    while (pos < t.size()) {
      size_t star = t.find('*', pos);
      std::string part = t.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      pos = star == std::string::npos ? t.size() : star + 1;
      int exp = 1;
      size_t caret = part.find('^');
      std::string name = part;
      if (caret != std::string::npos) {
        name = part.substr(0, caret);
        exp = std::stoi(part.substr(caret + 1));
      }
      bool found = false;
      for (size_t i = 0; i < gen_names.size(); ++i)
        if (gen_names[i] == name) {
          e[i] += exp;
          found = true;
          break;
        }
      require(found, Errc::ParseError, "unknown group generator '" + name + "'");
    }
    return index(e);
  }

  bool operator==(const GroupPresentation& o) const {
    return gen_names == o.gen_names && orders == o.orders;
  }
};

}  // namespace hopfmod
