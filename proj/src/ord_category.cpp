#include "fpcat/ord_category.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpcat {

int OrdCategory::compose(int g, int f) const {
  auto it = table.find({g, f});
  if (it == table.end())
    throw std::invalid_argument("OrdCategory::compose: no entry for (" + arrows[g].name + ", " +
                                arrows[f].name + ")");
  return it->second;
}

std::vector<int> OrdCategory::arrows_between(const std::string& a, const std::string& b) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
    if (arrows[i].src == a && arrows[i].dst == b) out.push_back(i);
  return out;
}

int OrdCategory::index_in_hom(int arrow) const {
  auto hom = arrows_between(arrows[arrow].src, arrows[arrow].dst);
  auto it = std::find(hom.begin(), hom.end(), arrow);
  return static_cast<int>(it - hom.begin());
}

std::optional<std::string> OrdCategory::validate() const {
  for (const auto& obj : objects) {
    auto it = identity.find(obj);
    if (it == identity.end()) return "missing identity for object " + obj;
    const Arrow& id = arrows[it->second];
    if (id.src != obj || id.dst != obj) return "identity of " + obj + " has wrong endpoints";
  }
  for (int g = 0; g < static_cast<int>(arrows.size()); ++g)
    for (int f = 0; f < static_cast<int>(arrows.size()); ++f) {
      if (arrows[f].dst != arrows[g].src) continue;
      auto it = table.find({g, f});
      if (it == table.end())
        return "composition " + arrows[g].name + "∘" + arrows[f].name + " missing";
      const Arrow& gf = arrows[it->second];
      if (gf.src != arrows[f].src || gf.dst != arrows[g].dst)
        return "composition " + arrows[g].name + "∘" + arrows[f].name + " has wrong endpoints";
    }
  for (int f = 0; f < static_cast<int>(arrows.size()); ++f) {
    int idd = identity.at(arrows[f].dst), ids = identity.at(arrows[f].src);
    if (compose(idd, f) != f) return "left unit law fails at " + arrows[f].name;
    if (compose(f, ids) != f) return "right unit law fails at " + arrows[f].name;
  }
  for (int h = 0; h < static_cast<int>(arrows.size()); ++h)
    for (int g = 0; g < static_cast<int>(arrows.size()); ++g)
      for (int f = 0; f < static_cast<int>(arrows.size()); ++f) {
        if (arrows[f].dst != arrows[g].src || arrows[g].dst != arrows[h].src) continue;
        if (compose(compose(h, g), f) != compose(h, compose(g, f)))
          return "associativity fails at (" + arrows[h].name + "," + arrows[g].name + "," +
                 arrows[f].name + ")";
      }
  return std::nullopt;
}

std::optional<std::string> OrdCategory::filtered_violation() const {
  if (objects.empty()) return "nonempty";
  for (const auto& i : objects)
    for (const auto& j : objects) {
      bool found = false;
      for (const auto& k : objects)
        if (!arrows_between(i, k).empty() && !arrows_between(j, k).empty()) found = true;
      if (!found) return "upper bounds (no cone over {" + i + ", " + j + "})";
    }
  for (int f = 0; f < static_cast<int>(arrows.size()); ++f)
    for (int g = 0; g < static_cast<int>(arrows.size()); ++g) {
      if (f == g || arrows[f].src != arrows[g].src || arrows[f].dst != arrows[g].dst) continue;
      bool found = false;
      for (int h = 0; h < static_cast<int>(arrows.size()); ++h) {
        if (arrows[h].src != arrows[f].dst) continue;
        if (compose(h, f) == compose(h, g)) found = true;
      }
      if (!found)
        return "coequalizing arrows (none for " + arrows[f].name + ", " + arrows[g].name + ")";
    }
  return std::nullopt;
}

namespace {
OrdCategory poset_from_leq(std::vector<std::string> objects,
                           const std::vector<std::pair<std::string, std::string>>& leq) {
  // arrows: one per related pair (reflexive-transitive closure given explicitly)
  OrdCategory c;
  c.objects = std::move(objects);
  auto related = [&](const std::string& a, const std::string& b) {
    if (a == b) return true;
    for (const auto& [x, y] : leq)
      if (x == a && y == b) return true;
    return false;
  };
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      if (related(a, b)) {
        if (a == b) c.identity[a] = static_cast<int>(c.arrows.size());
        c.arrows.push_back({a + "<=" + b, a, b});
      }
  for (int g = 0; g < static_cast<int>(c.arrows.size()); ++g)
    for (int f = 0; f < static_cast<int>(c.arrows.size()); ++f) {
      if (c.arrows[f].dst != c.arrows[g].src) continue;
      for (int h = 0; h < static_cast<int>(c.arrows.size()); ++h)
        if (c.arrows[h].src == c.arrows[f].src && c.arrows[h].dst == c.arrows[g].dst)
          c.table[{g, f}] = h;
    }
  return c;
}
}  // namespace

OrdCategory OrdCategory::reversed() const {
  OrdCategory r;
  r.objects = objects;
  for (const auto& a : arrows) r.arrows.push_back({a.name, a.dst, a.src});
  r.identity = identity;
  for (const auto& [gf, h] : table) r.table[{gf.second, gf.first}] = h;
  return r;
}

OrdCategory OrdCategory::terminal() {
  OrdCategory c;
  c.objects = {"*"};
  c.arrows = {{"id_*", "*", "*"}};
  c.identity["*"] = 0;
  c.table[{0, 0}] = 0;
  return c;
}

OrdCategory OrdCategory::chain_poset(int n) {
  std::vector<std::string> objs;
  std::vector<std::pair<std::string, std::string>> leq;
  for (int i = 0; i <= n; ++i) objs.push_back("a" + std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) leq.push_back({objs[i], objs[j]});
  return poset_from_leq(objs, leq);
}

OrdCategory OrdCategory::parallel_pair() {
  OrdCategory c;
  c.objects = {"a", "b"};
  c.arrows = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}, {"g", "a", "b"}};
  c.identity["a"] = 0;
  c.identity["b"] = 1;
  c.table[{0, 0}] = 0;
  c.table[{1, 1}] = 1;
  c.table[{2, 0}] = 2;
  c.table[{1, 2}] = 2;
  c.table[{3, 0}] = 3;
  c.table[{1, 3}] = 3;
  return c;
}

OrdCategory OrdCategory::split_idempotent() {
  OrdCategory c;
  c.objects = {"*"};
  c.arrows = {{"id_*", "*", "*"}, {"e", "*", "*"}};
  c.identity["*"] = 0;
  c.table[{0, 0}] = 0;
  c.table[{0, 1}] = 1;
  c.table[{1, 0}] = 1;
  c.table[{1, 1}] = 1;
  return c;
}

OrdCategory OrdCategory::square_poset() {
  return poset_from_leq({"p", "q", "r", "s"}, {{"p", "q"}, {"p", "r"}, {"q", "s"}, {"r", "s"}, {"p", "s"}});
}

OrdCategory OrdCategory::span() {
  return poset_from_leq({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
}

}  // namespace fpcat
