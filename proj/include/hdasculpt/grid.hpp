#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hdasculpt/bulk.hpp"
#include "hdasculpt/chu.hpp"
#include "hdasculpt/error.hpp"
#include "hdasculpt/precubical.hpp"

namespace hdasculpt {

inline constexpr std::size_t kMaxGridCells = 2000000;

// Elementary cube [a,b] with b_i - a_i in {0,1}.
struct Cube {
  std::vector<int> a;
  std::vector<int> b;

  int dim() const {
    int n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += b[i] > a[i];
    return n;
  }
  // Axes along which the cube extends, ascending.
  std::vector<int> dirr() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (b[i] > a[i]) out.push_back(static_cast<int>(i));
    return out;
  }
  Cube face(Dir d, int k) const {
    int axis = dirr().at(k - 1);
    Cube c = *this;
    if (d == Dir::s)
      c.b[axis] = c.a[axis];
    else
      c.a[axis] = c.b[axis];
    return c;
  }
  bool operator==(const Cube&) const = default;
  bool operator<(const Cube& o) const {
    int da = dim(), db = o.dim();
    if (da != db) return da < db;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

// "0+,2": the first axis spans [0,1], the second sits at 2.
inline std::string cube_name(const Cube& c) {
  if (c.a.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.a[i]);
    if (c.b[i] > c.a[i]) out += "+";
  }
  return out;
}

inline Cube vertex_cube(const std::vector<int>& x) { return Cube{x, x}; }

struct EuclideanComplex {
  int n = 0;  // ambient dimension
  std::vector<Cube> cubes;
};

namespace detail {

inline Hda hda_from_cubes(const std::set<Cube>& cubes, const Cube& initial) {
  CellTable raw;
  for (const auto& c : cubes) {
    std::vector<std::string> sf, tf;
    for (int k = 1; k <= c.dim(); ++k) {
      sf.push_back(cube_name(c.face(Dir::s, k)));
      tf.push_back(cube_name(c.face(Dir::t, k)));
    }
    raw.add(cube_name(c), sf, tf);
  }
  return Hda::from_table(raw, cube_name(initial));
}

// Bulk tuple of a cube inside the grid [0,M_1] x ... x [0,M_d]: M_k
// coordinates per axis, the first i of them 1 at position i.
inline ChuState grid_tuple(const std::vector<int>& sizes, const Cube& c) {
  ChuState v;
  for (std::size_t k = 0; k < sizes.size(); ++k)
    for (int i = 0; i < sizes[k]; ++i) {
      if (i < c.a[k])
        v.push_back(Chu3::one);
      else if (i == c.a[k] && c.b[k] > c.a[k])
        v.push_back(Chu3::half);
      else
        v.push_back(Chu3::zero);
    }
  return v;
}

inline std::set<Cube> grid_cubes(const std::vector<int>& sizes) {
  std::size_t total = 1;
  for (int m : sizes) {
    if (m < 0) throw Error(ErrorKind::InvalidInput, "grid sizes must be non-negative");
    total *= static_cast<std::size_t>(2 * m + 1);
    if (total > kMaxGridCells) throw Error(ErrorKind::ResourceLimit, "grid has too many cells");
  }
  std::set<Cube> out;
  std::size_t d = sizes.size();
  // per axis: 2*M+1 choices, even = vertex, odd = span
  std::vector<int> code(d, 0);
  for (;;) {
    Cube c{std::vector<int>(d), std::vector<int>(d)};
    for (std::size_t k = 0; k < d; ++k) {
      c.a[k] = code[k] / 2;
      c.b[k] = c.a[k] + code[k] % 2;
    }
    out.insert(c);
    std::size_t k = 0;
    while (k < d && code[k] == 2 * sizes[k]) code[k++] = 0;
    if (k == d) break;
    ++code[k];
  }
  return out;
}

}  // namespace detail

inline Hda make_grid(const std::vector<int>& sizes) {
  auto cubes = detail::grid_cubes(sizes);
  return detail::hda_from_cubes(cubes, vertex_cube(std::vector<int>(sizes.size(), 0)));
}

// Cube behind each cell of a grid or complex HDA, read back from its name.
inline Cube parse_cube_name(const std::string& name) {
  Cube c;
  if (name == "()") return c;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    std::size_t comma = name.find(',', pos);
    std::string tok = name.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    bool span = !tok.empty() && tok.back() == '+';
    if (span) tok.pop_back();
    int a = std::stoi(tok);
    c.a.push_back(a);
    c.b.push_back(a + (span ? 1 : 0));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return c;
}

inline Sculpture grid_to_bulk(const std::vector<int>& sizes) {
  Sculpture sc;
  sc.hda = make_grid(sizes);
  sc.d = 0;
  for (int m : sizes) sc.d += m;
  for (CellIdx q = 0; q < sc.hda.cells.size(); ++q)
    sc.em.push_back(detail::grid_tuple(sizes, parse_cube_name(sc.hda.cells.name(q))));
  return sc;
}

struct ComplexHda {
  Hda hda;
  std::vector<Cube> cubes;   // per cell
  std::vector<Cube> added;   // faces that had to be added
  std::vector<int> low;      // bounding box
  std::vector<int> sizes;
};

inline ComplexHda complex_to_hda(const EuclideanComplex& cx, const std::vector<int>& initial,
                                 bool complete_faces = true) {
  std::set<Cube> cubes;
  for (const auto& c : cx.cubes) {
    if (static_cast<int>(c.a.size()) != cx.n || static_cast<int>(c.b.size()) != cx.n)
      throw Error(ErrorKind::InvalidInput, "cube " + cube_name(c) + " has the wrong ambient dimension");
    for (int i = 0; i < cx.n; ++i)
      if (c.b[i] - c.a[i] != 0 && c.b[i] - c.a[i] != 1)
        throw Error(ErrorKind::InvalidInput, "not an elementary cube");
    cubes.insert(c);
  }
  ComplexHda out;
  std::deque<Cube> todo(cubes.begin(), cubes.end());
  while (!todo.empty()) {
    Cube c = todo.front();
    todo.pop_front();
    for (int k = 1; k <= c.dim(); ++k)
      for (Dir d : {Dir::s, Dir::t}) {
        Cube f = c.face(d, k);
        if (cubes.count(f)) continue;
        if (!complete_faces)
          throw Error(ErrorKind::NotFaceClosed, "missing face " + cube_name(f) + " of " + cube_name(c));
        cubes.insert(f);
        out.added.push_back(f);
        todo.push_back(f);
      }
  }
  Cube init = vertex_cube(initial);
  if (static_cast<int>(initial.size()) != cx.n || !cubes.count(init))
    throw Error(ErrorKind::InvalidInput, "initial vertex is not a vertex of the complex");
  out.hda = detail::hda_from_cubes(cubes, init);
  for (CellIdx q = 0; q < out.hda.cells.size(); ++q)
    out.cubes.push_back(parse_cube_name(out.hda.cells.name(q)));
  out.low.assign(cx.n, 0);
  out.sizes.assign(cx.n, 0);
  if (!cubes.empty()) {
    std::vector<int> hi = cubes.begin()->b;
    out.low = cubes.begin()->a;
    for (const auto& c : cubes)
      for (int i = 0; i < cx.n; ++i) {
        out.low[i] = std::min(out.low[i], c.a[i]);
        hi[i] = std::max(hi[i], c.b[i]);
      }
    for (int i = 0; i < cx.n; ++i) out.sizes[i] = hi[i] - out.low[i];
  }
  return out;
}

// Embeds through the bounding grid. The initial vertex has to be the lowest
// corner, as it must map to the bulk's initial cell.
inline Sculpture complex_to_sculpture(const ComplexHda& cx) {
  const auto& init = cx.cubes[cx.hda.initial];
  if (init.a != cx.low)
    throw Error(ErrorKind::InvalidInput, "initial vertex is not the lowest corner of the complex");
  Sculpture sc{cx.hda, 0, {}};
  for (int m : cx.sizes) sc.d += m;
  for (const auto& c : cx.cubes) {
    Cube shifted = c;
    for (std::size_t i = 0; i < c.a.size(); ++i) {
      shifted.a[i] -= cx.low[i];
      shifted.b[i] -= cx.low[i];
    }
    sc.em.push_back(detail::grid_tuple(cx.sizes, shifted));
  }
  return sc;
}

// Reads bulk tuples as cubes in [0,1]^d: 0 -> {0}, x -> [0,1], 1 -> {1}.
inline EuclideanComplex sculpture_to_complex(const Sculpture& sc) {
  EuclideanComplex cx{sc.d, {}};
  for (const auto& v : sc.em) {
    Cube c{std::vector<int>(sc.d), std::vector<int>(sc.d)};
    for (int i = 0; i < sc.d; ++i) {
      c.a[i] = v[i] == Chu3::one ? 1 : 0;
      c.b[i] = v[i] == Chu3::zero ? 0 : 1;
    }
    cx.cubes.push_back(c);
  }
  return cx;
}

}  // namespace hdasculpt
