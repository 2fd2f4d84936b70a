#include "qbt/quiver.hpp"

#include <sstream>

#include "qbt/field.hpp"

namespace qbt {

Quiver::Quiver(int vertices, std::vector<Arrow> arrows) : vertices_(vertices), arrows_(std::move(arrows)) {
  if (vertices < 0) throw InputError("negative vertex count");
  for (const auto& a : arrows_) {
    if (a.tail < 0 || a.tail >= vertices || a.head < 0 || a.head >= vertices) {
      throw InputError("arrow " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " out of range");
    }
  }
}

namespace {

void check_length(const Quiver& q, const DimensionVector& v) {
  if (static_cast<int>(v.size()) != q.vertex_count()) {
    throw InputError("dimension vector has length " + std::to_string(v.size()) + ", quiver has " +
                     std::to_string(q.vertex_count()) + " vertices");
  }
}

void check_count(int w) {
  if (w < 0) throw InputError("arrow count must be non-negative");
}

}  // namespace

long long euler_form(const Quiver& q, const DimensionVector& v, const DimensionVector& w) {
  check_length(q, v);
  check_length(q, w);
  long long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  for (const auto& a : q.arrows()) s -= v[a.tail] * w[a.head];
  return s;
}

long long tits_form(const Quiver& q, const DimensionVector& v) { return euler_form(q, v, v); }

Quiver kronecker(int w) {
  check_count(w);
  return Quiver(2, std::vector<Arrow>(w, Arrow{0, 1}));
}

Quiver three_vertex(int m, int n) {
  check_count(m);
  check_count(n);
  std::vector<Arrow> a(m, Arrow{0, 1});
  a.insert(a.end(), n, Arrow{1, 2});
  return Quiver(3, a);
}

Quiver syzygy_quiver(int w1, int w2) { return star_quiver({w1, w2}); }

Quiver star_quiver(const std::vector<int>& ws) {
  std::vector<Arrow> a;
  for (std::size_t j = 0; j < ws.size(); ++j) {
    check_count(ws[j]);
    a.insert(a.end(), ws[j], Arrow{static_cast<int>(j + 1), 0});
  }
  return Quiver(static_cast<int>(ws.size()) + 1, a);
}

Quiver parse_quiver_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("quiver spec '" + text + "' lacks ':'");
  std::string kind = text.substr(0, colon);
  std::vector<int> nums;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      nums.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad number '" + item + "' in quiver spec");
    }
  }
  if (kind == "kronecker" && nums.size() == 1) return kronecker(nums[0]);
  if (kind == "three" && nums.size() == 2) return three_vertex(nums[0], nums[1]);
  if (kind == "syzygy" && nums.size() == 2) return syzygy_quiver(nums[0], nums[1]);
  if (kind == "star" && !nums.empty()) return star_quiver(nums);
  throw InputError("unknown quiver spec '" + text + "'");
}

bool kac_forces_decomposable(const Quiver& q, const DimensionVector& v) { return tits_form(q, v) > 1; }

bool kronecker_is_schur_root(int w, const DimensionVector& v) {
  if (w < 3) throw InputError("Schur-root criterion needs at least 3 arrows, got " + std::to_string(w));
  return tits_form(kronecker(w), v) <= 1;
}

}  // namespace qbt
