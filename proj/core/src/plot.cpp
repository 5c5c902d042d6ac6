#include "binform/plot.hpp"

#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "binform/parallel.hpp"

namespace binform {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

// Edge ids: 2*(j*N + i) is the horizontal edge from node (i,j) to (i+1,j),
// 2*(j*N + i) + 1 the vertical edge from (i,j) to (i,j+1).
struct Crossing {
  long edge;
  double x, y;
};

}  // namespace

void validate(const PlotSpec& spec) {
  if (spec.samples < 16) throw Error(ErrorCode::InvalidArgument, "plot needs samples >= 16");
  if (!(spec.window > 0.0)) throw Error(ErrorCode::InvalidArgument, "plot window must be positive");
  if (!(spec.level > 0.0)) throw Error(ErrorCode::InvalidArgument, "plot level must be positive");
}

bool LevelSet::all_closed() const {
  if (polylines.empty()) return false;
  for (const auto& p : polylines)
    if (!p.closed) return false;
  return true;
}

LevelSet level_set(const BinaryForm& form, const PlotSpec& spec) {
  validate(spec);
  const long N = spec.samples;
  const double w = spec.window;
  const double step = 2.0 * w / static_cast<double>(N - 1);
  auto coord = [&](long i) { return i == N - 1 ? w : -w + step * static_cast<double>(i); };

  const auto a = form.complex_coeffs();
  auto value = [&](double x, double y) {
    Complex acc = a[0];
    double ypow = 1.0;
    for (std::size_t k = 1; k < a.size(); ++k) {
      ypow *= y;
      acc = acc * x + a[k] * ypow;
    }
    return std::abs(acc) - spec.level;
  };

  std::vector<double> f(static_cast<std::size_t>(N * N));
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t j) {
    for (long i = 0; i < N; ++i) f[j * N + i] = value(coord(i), coord(static_cast<long>(j)));
  });
  auto at = [&](long i, long j) { return f[j * N + i]; };
  auto inside = [&](long i, long j) { return at(i, j) < 0.0; };

  auto crossing = [&](long i, long j, bool vertical) {
    const long i1 = vertical ? i : i + 1, j1 = vertical ? j + 1 : j;
    const double f0 = at(i, j), f1 = at(i1, j1);
    const double t = f0 / (f0 - f1);
    const double x0 = coord(i), y0 = coord(j);
    Crossing c{2 * (j * N + i) + (vertical ? 1 : 0), x0, y0};
    if (vertical) c.y = y0 + t * (coord(j1) - y0);
    else c.x = x0 + t * (coord(i1) - x0);
    return c;
  };

  std::vector<std::pair<Crossing, Crossing>> pieces;
  for (long j = 0; j + 1 < N; ++j) {
    for (long i = 0; i + 1 < N; ++i) {
      // Corners counter-clockwise from bottom-left.
      const int mask = (inside(i, j) ? 1 : 0) | (inside(i + 1, j) ? 2 : 0) |
                       (inside(i + 1, j + 1) ? 4 : 0) | (inside(i, j + 1) ? 8 : 0);
      if (mask == 0 || mask == 15) continue;
      auto bottom = [&] { return crossing(i, j, false); };
      auto right = [&] { return crossing(i + 1, j, true); };
      auto top = [&] { return crossing(i, j + 1, false); };
      auto left = [&] { return crossing(i, j, true); };
      switch (mask) {
        case 1: case 14: pieces.emplace_back(left(), bottom()); break;
        case 2: case 13: pieces.emplace_back(bottom(), right()); break;
        case 4: case 11: pieces.emplace_back(right(), top()); break;
        case 8: case 7: pieces.emplace_back(top(), left()); break;
        case 3: case 12: pieces.emplace_back(left(), right()); break;
        case 6: case 9: pieces.emplace_back(bottom(), top()); break;
        case 5: case 10: {
          const double centre = value(0.5 * (coord(i) + coord(i + 1)), 0.5 * (coord(j) + coord(j + 1)));
          // Separate the two inside corners unless the centre joins them.
          const bool joined = (centre < 0.0) == (mask == 5);
          if (joined) {
            pieces.emplace_back(left(), top());
            pieces.emplace_back(bottom(), right());
          } else {
            pieces.emplace_back(left(), bottom());
            pieces.emplace_back(right(), top());
          }
          break;
        }
        default: break;
      }
    }
  }

  LevelSet out;
  for (const auto& [p, q] : pieces) out.segments.push_back({p.x, p.y, q.x, q.y});

  // Join pieces sharing an edge crossing into polylines.
  std::unordered_map<long, std::vector<std::size_t>> by_edge;
  for (std::size_t s = 0; s < pieces.size(); ++s) {
    by_edge[pieces[s].first.edge].push_back(s);
    by_edge[pieces[s].second.edge].push_back(s);
  }
  std::vector<bool> used(pieces.size(), false);
  auto other_piece = [&](long edge, std::size_t s) -> long {
    for (std::size_t t : by_edge[edge])
      if (t != s && !used[t]) return static_cast<long>(t);
    return -1;
  };
  auto trace = [&](std::size_t start, long from_edge) {
    Polyline line;
    std::size_t s = start;
    long edge = from_edge;
    const Crossing& first = pieces[s].first.edge == edge ? pieces[s].first : pieces[s].second;
    line.points.push_back({first.x, first.y});
    while (true) {
      used[s] = true;
      const Crossing& next = pieces[s].first.edge == edge ? pieces[s].second : pieces[s].first;
      line.points.push_back({next.x, next.y});
      edge = next.edge;
      if (edge == from_edge) {
        line.closed = true;
        break;
      }
      const long t = other_piece(edge, s);
      if (t < 0) break;
      s = static_cast<std::size_t>(t);
    }
    return line;
  };

  // Open chains start at crossings used by a single piece.
  for (std::size_t s = 0; s < pieces.size(); ++s) {
    if (used[s]) continue;
    for (long edge : {pieces[s].first.edge, pieces[s].second.edge}) {
      if (!used[s] && by_edge[edge].size() == 1) out.polylines.push_back(trace(s, edge));
    }
  }
  for (std::size_t s = 0; s < pieces.size(); ++s)
    if (!used[s]) out.polylines.push_back(trace(s, pieces[s].first.edge));
  return out;
}

std::string to_csv(const LevelSet& set) {
  std::string out = "x0,y0,x1,y1\n";
  for (const auto& s : set.segments)
    out += fmt(s.x0) + "," + fmt(s.y0) + "," + fmt(s.x1) + "," + fmt(s.y1) + "\n";
  return out;
}

std::string to_svg(const LevelSet& set, const PlotSpec& spec) {
  const double w = spec.window;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"" +
                    fmt(-w) + " " + fmt(-w) + " " + fmt(2 * w) + " " + fmt(2 * w) + "\">\n";
  out += "<rect x=\"" + fmt(-w) + "\" y=\"" + fmt(-w) + "\" width=\"" + fmt(2 * w) + "\" height=\"" +
         fmt(2 * w) + "\" fill=\"white\"/>\n";
  out += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
         fmt(w / 300.0) + "\">\n";
  for (const auto& line : set.polylines) {
    out += "<polyline points=\"";
    for (std::size_t k = 0; k < line.points.size(); ++k)
      out += (k ? " " : "") + fmt(line.points[k][0]) + "," + fmt(line.points[k][1]);
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace binform
