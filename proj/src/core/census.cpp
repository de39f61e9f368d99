#include "core/census.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/conductor.hpp"
#include "core/dirichlet.hpp"
#include "core/error.hpp"
#include "core/nfield.hpp"
#include "core/primes.hpp"
#include "core/quadchar.hpp"

namespace artin3 {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Int parse_int(const std::string& s, const std::string& where) {
  std::string t = trim(s);
  check(!t.empty(), Err::SchemaError, where + ": empty integer");
  size_t i = (t[0] == '-') ? 1 : 0;
  check(i < t.size(), Err::SchemaError, where + ": bad integer '" + t + "'");
  for (; i < t.size(); ++i)
    check(t[i] >= '0' && t[i] <= '9', Err::SchemaError,
          where + ": bad integer '" + t + "'");
  return Int(t);
}

int label_degree(const std::string& label) {
  if (label == "C3" || label == "S3") return 3;
  if (label == "A4" || label == "S4") return 4;
  if (label == "A5") return 5;
  return 0;
}

// Shape and consistency checks shared by both file formats. Row numbering
// is 1-based for messages.
FieldRow validate_row(int degree, std::vector<Int> coeffs, const Int& disc,
                      std::string label, std::string source, bool strict,
                      const std::string& where) {
  check(degree >= 3 && degree <= 6, Err::SchemaError, where + ": degree out of range");
  check(static_cast<int>(coeffs.size()) == degree + 1, Err::SchemaError,
        where + ": coefficient count does not match the degree");
  check(coeffs.back() == 1, Err::SchemaError, where + ": polynomial is not monic");
  check(disc != 0, Err::SchemaError, where + ": zero discriminant");

  FieldRow r;
  r.degree = degree;
  r.poly = ZPoly::from_coeffs(std::move(coeffs));
  r.disc = disc;
  r.source = std::move(source);

  if (degree == 3) {
    std::string expect = is_square(disc) ? "C3" : "S3";
    if (label.empty()) label = expect;
    check(label == expect, Err::SchemaError,
          where + ": cubic label contradicts the discriminant square test");
  } else if (degree == 4) {
    check(label == "A4" || label == "S4", Err::SchemaError,
          where + ": quartic label must be A4 or S4");
    check((label == "A4") == is_square(disc), Err::SchemaError,
          where + ": quartic label contradicts the discriminant square test");
  } else if (degree == 5) {
    check(label == "A5", Err::SchemaError, where + ": quintic label must be A5");
    check(is_square(disc), Err::SchemaError,
          where + ": A5 label requires a square discriminant");
  } else {
    check(label_degree(label) != 0, Err::SchemaError, where + ": unknown label");
  }
  r.galois_label = std::move(label);

  if (strict) {
    Int dk;
    try {
      if (degree == 3) r.poly = cubic_canonical_poly(r.poly);
      dk = field_disc(r.poly).first;
    } catch (const Error& e) {
      if (e.code() == Err::DiscMismatch) throw;
      fail(Err::SchemaError, where + ": " + e.what());
    }
    check(dk == disc, Err::DiscMismatch,
          where + ": stated discriminant " + disc.str() + " but computed " + dk.str());
    r.disc_verified = true;
  }
  return r;
}

}  // namespace

FieldTable ingest_text(const std::string& text, bool strict, const std::string& name) {
  FieldTable t;
  std::set<std::pair<int, ZPoly>> seen;
  bool jsonl = false;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') continue;
    jsonl = (ch == '{');
    break;
  }

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty()) continue;
    std::string where = name + ":" + std::to_string(lineno);
    FieldRow row;
    if (jsonl) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(body);
      } catch (const nlohmann::json::exception& e) {
        fail(Err::SchemaError, where + ": " + e.what());
      }
      check(j.is_object() && j.contains("degree") && j.contains("coeffs") &&
                j.contains("disc") && j.contains("galois_label") && j.contains("source"),
            Err::SchemaError, where + ": missing required keys");
      check(j["degree"].is_number_integer() && j["coeffs"].is_array() &&
                j["disc"].is_string() && j["galois_label"].is_string() &&
                j["source"].is_string(),
            Err::SchemaError, where + ": wrong value types");
      std::vector<Int> coeffs;
      for (const auto& c : j["coeffs"]) {
        check(c.is_string(), Err::SchemaError, where + ": coefficients must be strings");
        coeffs.push_back(parse_int(c.get<std::string>(), where));
      }
      row = validate_row(j["degree"].get<int>(), std::move(coeffs),
                         parse_int(j["disc"].get<std::string>(), where),
                         j["galois_label"].get<std::string>(),
                         j["source"].get<std::string>(), strict, where);
    } else {
      if (lineno == 1 && body.rfind("degree,", 0) == 0) continue;  // header
      std::vector<std::string> f = split(body, ',');
      check(f.size() >= 5, Err::SchemaError, where + ": expected at least 5 columns");
      Int deg = parse_int(f[0], where);
      check(deg >= 1 && deg <= 12, Err::SchemaError, where + ": degree out of range");
      std::vector<Int> coeffs;
      for (const std::string& c : split(trim(f[1]), ';'))
        coeffs.push_back(parse_int(c, where));
      row = validate_row(deg.convert_to<int>(), std::move(coeffs),
                         parse_int(f[2], where), trim(f[3]), trim(f[4]), strict, where);
    }
    check(seen.insert({row.degree, row.poly}).second, Err::SchemaError,
          where + ": duplicate polynomial");
    t.rows.push_back(std::move(row));
  }
  return t;
}

FieldTable ingest(const std::string& path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  check(in.good(), Err::IoError, "cannot open table file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_text(buf.str(), strict, path);
}

Int count_rows_below(const FieldTable& t, const std::string& label, const Int& bound) {
  int deg = label_degree(label);
  check(deg != 0, Err::InvalidArgument, "unknown label " + label);
  Int n = 0;
  for (const FieldRow& r : t.rows)
    if (r.degree == deg && r.galois_label == label && abs(r.disc) <= bound) ++n;
  return n;
}

namespace {

// Largest |disc| in the table at a label, or 0 when the label is empty.
Int max_abs_disc(const FieldTable& t, const std::string& label) {
  int deg = label_degree(label);
  Int m = 0;
  for (const FieldRow& r : t.rows)
    if (r.degree == deg && r.galois_label == label && abs(r.disc) > m) m = abs(r.disc);
  return m;
}

}  // namespace

CensusRecord theta1_bound(const Int& x, const FieldTable& t) {
  check(x >= 1, Err::InvalidArgument, "bound must be positive");
  Conductor qx = Conductor::from_value(x);
  Int t4 = disc_from_conductor_bound("A4", qx);
  Int t5 = disc_from_conductor_bound("A5", qx);

  std::string empties;
  for (auto [label, thr] : {std::pair<const char*, Int>{"A4", t4}, {"S4", t4}, {"A5", t5}}) {
    Int m = max_abs_disc(t, label);
    if (m == 0) {
      if (!empties.empty()) empties += "+";
      empties += label;
      continue;  // explicit opt-out: no rows of this label at all
    }
    check(m >= thr, Err::CoverageGap,
          std::string("table for ") + label + " ends at " + m.str() +
              " below the threshold " + thr.str());
  }

  Int a4 = count_rows_below(t, "A4", t4);
  Int s4 = count_rows_below(t, "S4", t4);
  Int a5 = count_rows_below(t, "A5", t5);

  CensusRecord rec;
  rec.function = "theta1";
  rec.x = x;
  rec.count = a4 + s4 + a5;
  rec.method = "upper-bound";
  rec.notes = "t4=" + t4.str() + ";t5=" + t5.str() + ";a4=" + a4.str() +
              ";s4=" + s4.str() + ";a5=" + a5.str();
  if (!empties.empty()) rec.notes += ";empty=" + empties;
  return rec;
}

namespace {

struct PairKernel {
  Int raw = 0;
  int64_t fields = 0;
  Int mismatches = 0;
};

// Pairs (M, chi) with the requested parent type, q(chi) |d_M| <= x, and the
// conductor of each pair cross-checked through induced_conductor.
PairKernel monomial_pairs(const Int& x, CubicGalois want) {
  check(x >= 1, Err::InvalidArgument, "bound must be positive");
  check(x <= 10000000, Err::CoverageGap,
        "cubic enumeration is certified only up to 10^7");
  PairKernel k;
  for (const CubicFieldRecord& r : enumerate_cubic_fields(x)) {
    if (r.galois != want) continue;
    ++k.fields;
    Int xm = x / abs(r.d);  // q <= floor(x / |d|) iff q |d| <= x
    FieldPtr mf = NumberField::make(r.poly);
    QuadCharSweep s = enumerate_quad_chars(mf, xm, quadchar_min_radius(mf, xm));
    for (const QuadCharRecord& rec : s.records) {
      k.raw += 1;
      Int via = induced_conductor(abs(r.d), Conductor::from_value(rec.q)).value();
      if (via != abs(r.d) * rec.q) k.mismatches += 1;
    }
  }
  return k;
}

CensusRecord pair_record(const std::string& function, const Int& x, const PairKernel& k) {
  CensusRecord rec;
  rec.function = function;
  rec.x = x;
  rec.count = k.raw;
  rec.method = "heuristic-complete";
  Int g = gcd(k.raw, Int(3));
  std::string div3 = (g == 3) ? Int(k.raw / 3).str() : k.raw.str() + "/3";
  rec.notes = "fields=" + std::to_string(k.fields) + ";raw=" + k.raw.str() +
              ";div3=" + div3 + ";mismatches=" + k.mismatches.str();
  return rec;
}

}  // namespace

CensusRecord theta_S4_monomial(const Int& x) {
  return pair_record("ThetaS4", x, monomial_pairs(x, CubicGalois::Generic));
}

CensusRecord phi_H(const Int& x, const std::string& H) {
  check(H == "A4" || H == "S4", Err::InvalidArgument, "H must be A4 or S4");
  CubicGalois want = (H == "A4") ? CubicGalois::Cyclic : CubicGalois::Generic;
  return pair_record("Phi" + H, x, monomial_pairs(x, want));
}

namespace {

// Largest c >= 0 with q c^3 <= x.
Int icbrt_quotient(const Int& x, const Int& q) {
  Int lo = 0, hi = 1;
  while (hi * hi * hi * q <= x) hi <<= 1;
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (mid * mid * mid * q <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

CensusRecord psi_A5(const Int& x, const FieldTable& quintics, bool skip_index_divisors) {
  check(x >= 1, Err::InvalidArgument, "bound must be positive");

  // Fundamental discriminant absolute values up to the largest possible
  // twisting conductor, ascending.
  std::vector<Int> fund;
  for (const DirichletCharacter& chi :
       quadratic_characters(icbrt_quotient(x, 1).convert_to<int64_t>()))
    if (chi.conductor() > 1) fund.push_back(Int(chi.conductor()));
  std::sort(fund.begin(), fund.end());

  Int count = 0, mism = 0;
  int64_t fields = 0, skipped = 0;
  for (const FieldRow& row : quintics.rows) {
    if (row.degree != 5 || row.galois_label != "A5") continue;
    std::vector<std::pair<Int, char>> tame;  // (p, inertia class)
    try {
      FieldPtr f = NumberField::make(row.poly);
      for (const auto& [p, e] : factorize(abs(row.disc))) {
        if (p <= 5) continue;  // wild menu handles 2, 3, 5
        int order = 1;
        for (auto [fdeg, eidx] : prime_splitting(f, p)) order = std::lcm(order, eidx);
        if (order == 1) continue;
        char cls = order == 2 ? 'A' : order == 3 ? 'B' : order == 5 ? 'C' : '?';
        check(cls != '?', Err::InvalidArgument,
              "tame inertia order " + std::to_string(order) +
                  " is incompatible with an A5 label at p = " + p.str());
        tame.push_back({p, cls});
      }
    } catch (const Error& e) {
      if (e.code() == Err::IndexDivisor && skip_index_divisors) {
        ++skipped;
        continue;
      }
      throw;
    }
    ++fields;

    int nt = static_cast<int>(tame.size());
    for (int mask = 0; mask < (1 << nt); ++mask) {
      TwistSupport sup;
      for (int i = 0; i < nt; ++i) {
        auto [p, cls] = tame[i];
        bool primed = (mask >> i) & 1;
        (cls == 'A' ? (primed ? sup.a1 : sup.a2)
                    : cls == 'B' ? (primed ? sup.b1 : sup.b2)
                                 : (primed ? sup.c1 : sup.c2))
            .push_back(p);
      }
      Conductor q_tame = twist_tame_exponents(sup);
      Conductor cap = wild_cap(5);
      for (int a : {0, 2, 3})
        for (int b : {0, 1})
          for (int c : {0, 1}) {
            std::map<Int, int> wf = q_tame.factored;
            if (a) wf[2] = std::min(a, cap.exponent_at(2));
            if (b) wf[3] = std::min(b, cap.exponent_at(3));
            if (c) wf[5] = std::min(c, cap.exponent_at(5));
            Conductor q1 = Conductor::from_factored(wf);
            Int q1v = q1.value();
            if (q1v > x) continue;
            Int lim = icbrt_quotient(x, q1v);

            // Trivial chi' always qualifies.
            count += 1;
            if (twist_conductor(q1, Conductor::one()).value() != q1v) mism += 1;
            for (const Int& d : fund) {
              if (d > lim) break;
              if (gcd(d, q1v) != 1) continue;
              count += 1;
              Int key = q1v * d * d * d;
              if (twist_conductor(q1, Conductor::from_value(d)).value() != key)
                mism += 1;
            }
          }
    }
  }

  CensusRecord rec;
  rec.function = "PsiA5";
  rec.x = x;
  rec.count = count;
  rec.method = "upper-bound";
  rec.notes = "fields=" + std::to_string(fields) + ";skipped=" + std::to_string(skipped) +
              ";mismatches=" + mism.str();
  return rec;
}

namespace {

struct Cell {
  std::string value;   // count, ratio, or marker
  std::string method;  // exact, upper-bound, heuristic-complete, out-of-scope, error
  std::string notes;
  bool ok = false;  // numeric value present
  Int num = 0;
};

std::string err_marker(Err code) {
  switch (code) {
    case Err::CoverageGap: return "error:coverage-gap";
    case Err::SchemaError: return "error:schema-error";
    case Err::DiscMismatch: return "error:disc-mismatch";
    case Err::BoundTooLarge: return "error:bound-too-large";
    case Err::BoxTooSmall: return "error:box-too-small";
    case Err::IndexDivisor: return "error:index-divisor";
    case Err::InvalidArgument: return "error:invalid-argument";
    default: return "error:internal";
  }
}

Cell eval_cell(const std::function<CensusRecord()>& f) {
  Cell c;
  try {
    CensusRecord r = f();
    c.value = r.count.str();
    c.method = r.method;
    c.notes = r.notes;
    c.ok = true;
    c.num = r.count;
  } catch (const Error& e) {
    c.value = err_marker(e.code());
    c.method = "error";
    c.notes = e.what();
  }
  return c;
}

// Rounded 1e6 * a / b, rendered with six decimals.
std::string ratio6(const Int& a, const Int& b) {
  Int scaled = (a * 2000000 + b) / (2 * b);
  Int ip = scaled / 1000000, fp = scaled % 1000000;
  std::string frac = fp.str();
  frac.insert(frac.begin(), 6 - frac.size(), '0');
  return ip.str() + "." + frac;
}

struct ReportRow {
  Int x;
  std::vector<std::pair<std::string, Cell>> cells;  // fixed order
};

std::vector<ReportRow> compute_rows(const std::vector<Int>& grid, const FieldTable& t) {
  check(!grid.empty(), Err::InvalidArgument, "empty grid");
  for (size_t i = 0; i + 1 < grid.size(); ++i)
    check(grid[i] < grid[i + 1], Err::InvalidArgument, "grid must be strictly ascending");
  check(grid.front() >= 1, Err::InvalidArgument, "grid entries must be positive");

  std::vector<ReportRow> rows;
  for (const Int& x : grid) {
    ReportRow row;
    row.x = x;
    Cell ab = eval_cell([&] {
      check(x <= 1000000, Err::BoundTooLarge, "abelian count bound above 10^6");
      CensusRecord r{"ab", x, count_ab3(x.convert_to<int64_t>()), "exact", ""};
      return r;
    });
    Cell absd = eval_cell([&] {
      check(x <= 1000000, Err::BoundTooLarge, "abelian count bound above 10^6");
      CensusRecord r{"absd", x, count_ab_sd3(x.convert_to<int64_t>()), "exact", ""};
      return r;
    });
    Cell otp;  // the 2-dimensional census is out of scope, emitted explicitly
    otp.value = "out-of-scope";
    otp.method = "out-of-scope";
    Cell th1 = eval_cell([&] { return theta1_bound(x, t); });
    Cell ths4 = eval_cell([&] { return theta_S4_monomial(x); });
    Cell psi = eval_cell([&] { return psi_A5(x, t, true); });
    Cell ph4 = eval_cell([&] { return phi_H(x, "A4"); });
    Cell ph5 = eval_cell([&] { return phi_H(x, "S4"); });

    Cell sd;
    const Cell* parts[] = {&absd, &th1, &ths4, &psi, &ph4, &ph5};
    bool all_ok = true;
    for (const Cell* p : parts) all_ok = all_ok && p->ok;
    if (all_ok) {
      sd.ok = true;
      for (const Cell* p : parts) sd.num += p->num;
      sd.value = sd.num.str();
      sd.method = "upper-bound";
      for (const Cell* p : parts)
        if (p->method == "heuristic-complete") sd.method = "heuristic-complete";
      sd.notes = "absd+theta1+theta_s4+psi_a5+phi_a4+phi_s4";
    } else {
      sd.value = "error:component";
      sd.method = "error";
      sd.notes = "a contributing cell failed";
    }

    Cell r1, r2;
    if (ab.ok && absd.ok) {
      r1.ok = true;
      r1.value = ratio6(absd.num, ab.num);
      r1.method = "exact";
    } else {
      r1.value = "error:component";
      r1.method = "error";
    }
    if (ab.ok && sd.ok) {
      r2.ok = true;
      r2.value = ratio6(sd.num, ab.num);
      r2.method = sd.method;
    } else {
      r2.value = "error:component";
      r2.method = "error";
    }

    row.cells = {{"ab", ab},           {"absd", absd},         {"one_plus_two", otp},
                 {"theta1", th1},      {"theta_s4", ths4},     {"psi_a5", psi},
                 {"phi_a4", ph4},      {"phi_s4", ph5},        {"sd_upper", sd},
                 {"ratio_absd_ab", r1}, {"ratio_sd_ab", r2}};
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string density_report(const std::vector<Int>& grid, const FieldTable& t) {
  std::vector<ReportRow> rows = compute_rows(grid, t);
  std::string s = "x";
  for (const auto& [name, cell] : rows.front().cells) s += "," + name;
  for (const auto& [name, cell] : rows.front().cells) s += "," + name + "_method";
  s += "\n";
  for (const ReportRow& row : rows) {
    s += row.x.str();
    for (const auto& [name, cell] : row.cells) s += "," + cell.value;
    for (const auto& [name, cell] : row.cells) s += "," + cell.method;
    s += "\n";
  }
  return s;
}

std::string density_report_json(const std::vector<Int>& grid, const FieldTable& t) {
  std::vector<ReportRow> rows = compute_rows(grid, t);
  nlohmann::json out;
  out["rows"] = nlohmann::json::array();
  for (const ReportRow& row : rows) {
    nlohmann::json jr;
    jr["x"] = row.x.str();
    for (const auto& [name, cell] : row.cells) {
      jr["cells"][name] = {
          {"value", cell.value}, {"method", cell.method}, {"notes", cell.notes}};
    }
    out["rows"].push_back(std::move(jr));
  }
  return out.dump();
}

}  // namespace artin3
