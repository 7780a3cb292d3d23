// Command-line front end: quadrilateral moduli, reference tables as CSV,
// and grid-oracle sweeps over the generated condenser families.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "condcap/capforms.hpp"
#include "condcap/capsolve.hpp"
#include "condcap/geomgen.hpp"
#include "condcap/hypgeom.hpp"
#include "condcap/quadmod.hpp"
#include "condcap/reference_tables.hpp"
#include "condcap/ringbound.hpp"
#include "condcap/specfun.hpp"

namespace {

using condcap::cpx;

struct RowError {
  std::string where;
  std::string message;
};

std::vector<RowError> g_errors;

void note_error(const std::string& where, const std::string& message) {
  g_errors.push_back({where, message});
}

// locale-independent, up to 15 significant digits
std::string fmt(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 15);
  return std::string(buf, ptr);
}

std::string fmt_cpx(cpx z) {
  std::string out = fmt(z.real());
  if (z.imag() >= 0.0) out += "+";
  out += fmt(z.imag());
  out += "i";
  return out;
}

// complex literals: "a+bi", "a-bi", "a", "bi", "i", "-i"; spaces allowed
std::optional<cpx> parse_complex(std::string text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) return std::nullopt;
  auto read_num = [](const std::string& str, size_t& pos) -> std::optional<double> {
    double sign = 1.0;
    if (pos < str.size() && (str[pos] == '+' || str[pos] == '-')) {
      if (str[pos] == '-') sign = -1.0;
      ++pos;
    }
    const size_t start = pos;
    while (pos < str.size() &&
           (std::isdigit(static_cast<unsigned char>(str[pos])) ||
            str[pos] == '.' || str[pos] == 'e' || str[pos] == 'E' ||
            ((str[pos] == '+' || str[pos] == '-') &&
             (str[pos - 1] == 'e' || str[pos - 1] == 'E'))))
      ++pos;
    if (pos == start) return sign;  // bare sign: unit coefficient for "i"
    double v = 0.0;
    auto res = std::from_chars(str.data() + start, str.data() + pos, v);
    if (res.ec != std::errc() || res.ptr != str.data() + pos)
      return std::nullopt;
    return sign * v;
  };
  size_t pos = 0;
  auto first = read_num(s, pos);
  if (!first) return std::nullopt;
  if (pos == s.size()) return cpx(*first, 0.0);
  if (s[pos] == 'i') {
    if (pos + 1 != s.size()) return std::nullopt;
    return cpx(0.0, *first);
  }
  auto second = read_num(s, pos);
  if (!second) return std::nullopt;
  if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size())
    return std::nullopt;
  return cpx(*first, *second);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    std::string full = path;
    const char* dir = std::getenv("CONDCAP_OUTPUT_DIR");
    if (dir && *dir && path.front() != '/') full = std::string(dir) + "/" + path;
    file_.open(full);
    if (!file_) throw std::runtime_error("cannot open output file: " + full);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    os << cells[i];
    if (i + 1 < cells.size()) os << ",";
  }
  os << "\n";
}

int finish() {
  if (g_errors.empty()) return 0;
  std::ostringstream js;
  js << "{\"errors\":[";
  for (size_t i = 0; i < g_errors.size(); ++i) {
    if (i) js << ",";
    js << "{\"where\":\"" << g_errors[i].where << "\",\"message\":\""
       << g_errors[i].message << "\"}";
  }
  js << "]}";
  std::cerr << js.str() << "\n";
  return 1;
}

double h_perimeter_of_polygon(const std::vector<cpx>& vertices) {
  return condcap::hypgeom::perimeter_trapezoid(
      condcap::hypgeom::polygon_curve(vertices));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conformal capacities, quadrilateral moduli and hyperbolic perimeters"};
  app.require_subcommand(1);

  std::string a_text, b_text, output_path, family = "convex";
  int count = 20, steps = 12;
  std::uint64_t seed = 1;
  double grid_h = 1.0 / 128.0;
  double theta = M_PI / 4.0, radius = 0.5, tmin = 0.05, tmax = 0.0;
  bool with_oracle = false;

  auto* cmd_qm = app.add_subcommand("qm", "modulus of the quadrilateral (0,1,A,B)");
  cmd_qm->add_option("--A", a_text)->required();
  cmd_qm->add_option("--B", b_text)->required();

  auto* cmd_qmt = app.add_subcommand(
      "qmt", "modulus when A lies on the segment [1,B]");
  cmd_qmt->add_option("--A", a_text)->required();
  cmd_qmt->add_option("--B", b_text)->required();

  auto* cmd_t1 = app.add_subcommand("table1", "quadrilateral moduli vs references");
  cmd_t1->add_option("--output", output_path);
  auto* cmd_t2 = app.add_subcommand("table2", "regular ring capacities vs references");
  cmd_t2->add_option("--output", output_path);
  auto* cmd_t3 = app.add_subcommand("table3", "half-disk bounds vs references");
  cmd_t3->add_option("--output", output_path);
  cmd_t3->add_flag("--with-oracle", with_oracle,
                   "also run the grid oracle for the capacity column (slow)");
  auto* cmd_t4 = app.add_subcommand("table4", "rectangle-with-segment vs references");
  cmd_t4->add_option("--output", output_path);
  auto* cmd_lb = app.add_subcommand("lbnew", "half-disk splitting bound vs references");
  cmd_lb->add_option("--output", output_path);

  auto* cmd_sweep = app.add_subcommand(
      "sweep-edi", "perimeter and capacities over a polygon family");
  cmd_sweep->add_option("--family", family)
      ->check(CLI::IsMember({"convex", "hyperbolic", "nonconvex"}));
  cmd_sweep->add_option("--count", count)->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--seed", seed);
  cmd_sweep->add_option("--grid-h", grid_h);
  cmd_sweep->add_option("--output", output_path);

  auto* cmd_et = app.add_subcommand("et-curve", "capacity of the arc tube E(t)");
  cmd_et->add_option("--theta", theta);
  cmd_et->add_option("--r", radius);
  cmd_et->add_option("--tmin", tmin);
  cmd_et->add_option("--tmax", tmax);
  cmd_et->add_option("--steps", steps)->check(CLI::PositiveNumber);
  cmd_et->add_option("--grid-h", grid_h);
  cmd_et->add_option("--output", output_path);

  double pip_h = 1.0 / 16.0;
  auto* cmd_pip = app.add_subcommand(
      "pip", "polygon-in-polygon capacity and ring lower bound");
  cmd_pip->add_option("--tmin", tmin);
  cmd_pip->add_option("--tmax", tmax);
  cmd_pip->add_option("--steps", steps)->check(CLI::PositiveNumber);
  cmd_pip->add_option("--grid-h", pip_h);
  cmd_pip->add_option("--output", output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_qm || *cmd_qmt) {
      const auto A = parse_complex(a_text), B = parse_complex(b_text);
      if (!A || !B) {
        std::cerr << "{\"errors\":[{\"where\":\"args\",\"message\":"
                     "\"malformed complex literal\"}]}\n";
        return 2;
      }
      const double v = *cmd_qm ? condcap::quadmod::qm(*A, *B)
                               : condcap::quadmod::qmt(*A, *B);
      std::cout << fmt(v) << "\n";
      return 0;
    }

    Output out(output_path);
    std::ostream& os = out.stream();

    if (*cmd_t1) {
      emit_row(os, {"A", "B", "qm", "reference", "deviation", "recip_residual"});
      for (const auto& row : condcap::tables::kTable1) {
        try {
          const double v = condcap::quadmod::qm(row.A, row.B);
          const double recip = condcap::quadmod::qm(
              (row.B - 1.0) / (row.A - 1.0), -1.0 / (row.A - 1.0));
          emit_row(os, {fmt_cpx(row.A), fmt_cpx(row.B), fmt(v), fmt(row.qm),
                        fmt(std::abs(v - row.qm)), fmt(std::abs(v * recip - 1.0))});
        } catch (const std::exception& e) {
          note_error("table1 " + fmt_cpx(row.A), e.what());
        }
      }
    } else if (*cmd_t2) {
      emit_row(os, {"m", "lambda", "cap", "reference", "deviation"});
      for (size_t im = 0; im < condcap::tables::kTable2M.size(); ++im) {
        for (size_t il = 0; il < condcap::tables::kTable2Lambda.size(); ++il) {
          const int m = condcap::tables::kTable2M[im];
          const double lam = condcap::tables::kTable2Lambda[il];
          try {
            const double v = condcap::ringbound::cap_regular_ring(m, lam);
            const double ref = condcap::tables::kTable2[im][il];
            emit_row(os, {std::to_string(m), fmt(lam), fmt(v), fmt(ref),
                          fmt(std::abs(v - ref))});
          } catch (const std::exception& e) {
            note_error("table2 m=" + std::to_string(m), e.what());
          }
        }
      }
      for (size_t il = 0; il < condcap::tables::kTable2Lambda.size(); ++il) {
        const double lam = condcap::tables::kTable2Lambda[il];
        const double v = condcap::capforms::mod_annulus(lam, 1.0);
        emit_row(os, {"inf", fmt(lam), fmt(v),
                      fmt(condcap::tables::kTable2Inf[il]),
                      fmt(std::abs(v - condcap::tables::kTable2Inf[il]))});
      }
    } else if (*cmd_t3) {
      std::vector<std::string> header = {
          "t",      "lb_symmetrization", "ref_lb_symmetrization", "dev_lb_symmetrization",
          "lb_segment", "ref_lb_segment", "dev_lb_segment",
          "ub_disk", "ref_ub_disk", "dev_ub_disk", "cap_ref_x05", "cap_ref_x075"};
      if (with_oracle) {
        header.push_back("cap_grid_x05");
        header.push_back("cap_grid_err");
      }
      emit_row(os, header);
      for (const auto& row : condcap::tables::kTable3) {
        const auto b = condcap::capforms::halfdisk_bounds(row.t);
        std::vector<std::string> cells = {
            fmt(row.t),
            fmt(b.lower[0].value), fmt(row.lb_symmetrization),
            fmt(std::abs(b.lower[0].value - row.lb_symmetrization)),
            fmt(b.lower[1].value), fmt(row.lb_segment),
            fmt(std::abs(b.lower[1].value - row.lb_segment)),
            fmt(b.upper[0].value), fmt(row.ub_disk),
            fmt(std::abs(b.upper[0].value - row.ub_disk)),
            fmt(row.cap_x05), fmt(row.cap_x075)};
        if (with_oracle) {
          try {
            const double h0 = row.t < 2.5 ? 1.0 / 128 : 1.0 / 256;
            const auto est = condcap::capsolve::estimate_capacity(
                condcap::geomgen::build_halfdisk(0.5, row.t), 2, h0);
            cells.push_back(fmt(est.value));
            cells.push_back(fmt(est.error_estimate));
          } catch (const std::exception& e) {
            note_error("table3 t=" + fmt(row.t), e.what());
            cells.push_back("error");
            cells.push_back("error");
          }
        }
        emit_row(os, cells);
      }
    } else if (*cmd_t4) {
      emit_row(os, {"a", "b", "c", "d", "cap", "cap_ref", "dev_cap",
                    "lower_bound", "lb_ref", "dev_lb"});
      for (const auto& row : condcap::tables::kTable4) {
        try {
          const auto spec = condcap::capforms::make_rect_segment(row.a, row.b,
                                                                 row.c, row.d);
          const double cap = condcap::capforms::cap_rect_segment(spec);
          const double lb = condcap::ringbound::rect_segment_lower_bound(spec);
          emit_row(os, {fmt(row.a), fmt(row.b), fmt(row.c), fmt(row.d),
                        fmt(cap), fmt(row.cap), fmt(std::abs(cap - row.cap)),
                        fmt(lb), fmt(row.lower_bound),
                        fmt(std::abs(lb - row.lower_bound))});
        } catch (const std::exception& e) {
          note_error("table4 a=" + fmt(row.a), e.what());
        }
      }
    } else if (*cmd_lb) {
      emit_row(os, {"t", "lb_split", "ref", "deviation", "cap_ref"});
      for (const auto& row : condcap::tables::kLbNew) {
        const auto b = condcap::capforms::halfdisk_bounds(row.t);
        const double v = b.lower[2].value;
        emit_row(os, {fmt(row.t), fmt(v), fmt(row.lb_split),
                      fmt(std::abs(v - row.lb_split)), fmt(row.cap)});
      }
    } else if (*cmd_sweep) {
      emit_row(os, {"L", "cap_E", "cap_D", "cap_I"});
      condcap::geomgen::SeededRng base(seed);
      for (int row = 0; row < count; ++row) {
        auto rng = base.split(row);
        try {
          double L = 0.0;
          condcap::capsolve::Condenser cond;
          if (family == "convex") {
            const auto poly = condcap::geomgen::gen_convex_polygon(rng);
            L = h_perimeter_of_polygon(poly.vertices);
            cond = condcap::geomgen::polygon_condenser(poly.vertices);
          } else if (family == "nonconvex") {
            const auto poly = condcap::geomgen::gen_nonconvex_polygon(rng);
            L = h_perimeter_of_polygon(poly.vertices);
            cond = condcap::geomgen::polygon_condenser(poly.vertices);
          } else {
            std::vector<cpx> vertices;
            const auto curve = condcap::geomgen::gen_hyperbolic_polygon(rng, &vertices);
            L = condcap::hypgeom::polygon_hyp_perimeter(vertices);
            cond = condcap::geomgen::curve_condenser(curve);
          }
          const auto est = condcap::capsolve::estimate_capacity(cond, 2, grid_h);
          const double capD = condcap::capforms::cap_disk_by_perimeter(L);
          const double capI = condcap::capforms::cap_segment(std::tanh(0.25 * L));
          emit_row(os, {fmt(L), fmt(est.value), fmt(capD), fmt(capI)});
        } catch (const std::exception& e) {
          note_error("sweep row " + std::to_string(row), e.what());
        }
      }
    } else if (*cmd_et) {
      const double cap_t = condcap::capforms::et_tmax(theta, radius);
      if (tmax <= 0.0) tmax = 2.0 / 3.0 * cap_t;
      if (!(tmin > 0.0) || !(tmax >= tmin) || 3.0 * tmax > cap_t) {
        std::cerr << "{\"errors\":[{\"where\":\"et-curve\",\"message\":"
                     "\"t range outside the admissible interval\"}]}\n";
        return 2;
      }
      emit_row(os, {"t", "cap_Et", "cap_It"});
      for (int i = 0; i < steps; ++i) {
        const double t =
            steps == 1 ? tmin : tmin + (tmax - tmin) * i / (steps - 1);
        try {
          const auto curve = condcap::geomgen::build_Et(theta, radius, t);
          const auto est = condcap::capsolve::estimate_capacity(
              condcap::geomgen::curve_condenser(curve), 2, grid_h);
          const double f = condcap::capforms::et_perimeter(theta, radius, t);
          const double capI =
              condcap::capforms::cap_segment(std::tanh(0.25 * f));
          emit_row(os, {fmt(t), fmt(est.value), fmt(capI)});
        } catch (const std::exception& e) {
          note_error("et-curve t=" + fmt(t), e.what());
        }
      }
    } else if (*cmd_pip) {
      // S-shaped octagon with the matching inner octagon; the conformal map
      // of the outer region is unavailable, so the equal-perimeter disk
      // upper bound column cannot be computed here
      if (tmax <= 0.0) tmax = 2.0;
      if (!(tmin > 0.0) || !(tmax >= tmin) || tmax >= 3.0) {
        std::cerr << "{\"errors\":[{\"where\":\"pip\",\"message\":"
                     "\"t range outside (0,3)\"}]}\n";
        return 2;
      }
      emit_row(os, {"t", "lower_bound", "cap_grid", "cap_grid_err", "upper_bound"});
      for (int i = 0; i < steps; ++i) {
        const double t =
            steps == 1 ? tmin : tmin + (tmax - tmin) * i / (steps - 1);
        try {
          condcap::ringbound::PolygonalRing ring;
          ring.outer = {cpx(0, 3),  cpx(6, 3),  cpx(6, 9),  cpx(-6, 9),
                        cpx(-6, -9), cpx(5, -9), cpx(5, -3), cpx(0, -3)};
          ring.inner = {cpx(-2, 6 - t),    cpx(5, 6 - t),  cpx(5, 6 + t),
                        cpx(-4, 6 + t),    cpx(-4, -(6 + t)),
                        cpx(4, -(6 + t)),  cpx(4, -(6 - t)),
                        cpx(-2, -(6 - t))};
          const double lb = condcap::ringbound::ring_lower_bound(ring);
          const auto est = condcap::capsolve::estimate_capacity(
              condcap::geomgen::ring_condenser(ring), 2, pip_h);
          emit_row(os, {fmt(t), fmt(lb), fmt(est.value),
                        fmt(est.error_estimate), "unavailable"});
        } catch (const std::exception& e) {
          note_error("pip t=" + fmt(t), e.what());
        }
      }
    }
  } catch (const std::exception& e) {
    note_error("fatal", e.what());
  }
  return finish();
}
