#include "osp12/report.hpp"

#include <json.hpp>
#include <sstream>

#include "osp12/verify.hpp"

namespace osp12 {

using ordered_json = nlohmann::ordered_json;

std::string status_str(DocStatus s) {
  switch (s) {
    case DocStatus::Pass: return "pass";
    case DocStatus::Fail: return "fail";
    case DocStatus::ReportOnly: return "report-only";
  }
  return "fail";
}

namespace {

WeightRow row_of(const AdmissiblePair& pr, const AdmissibleWeight& w) {
  return {w.m, w.s, w.value(pr).str()};
}

std::vector<WeightRow> rows_of(const AdmissiblePair& pr,
                               const std::vector<AdmissibleWeight>& ws) {
  std::vector<WeightRow> rows;
  rows.reserve(ws.size());
  for (const auto& w : ws) rows.push_back(row_of(pr, w));
  return rows;
}

// "num/den" -> TeX, \frac for proper fractions with the sign outside.
std::string tex_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return s;
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  std::string sign;
  if (!num.empty() && num[0] == '-') {
    sign = "-";
    num = num.substr(1);
  }
  return sign + "\\frac{" + num + "}{" + den + "}";
}

std::string summands_str(const std::vector<WeightRow>& rows) {
  if (rows.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "+";
    s += "(" + std::to_string(rows[i].m) + "," + std::to_string(rows[i].s) + ")";
  }
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

ordered_json weight_row_json(const WeightRow& w) {
  return ordered_json{{"m", w.m}, {"s", w.s}, {"j", w.j}};
}

ordered_json payload_json(const WeightsPayload& p) {
  ordered_json j;
  j["valid"] = p.valid;
  j["violations"] = p.violations;
  ordered_json ws = ordered_json::array();
  for (const auto& w : p.weights) ws.push_back(weight_row_json(w));
  j["weights"] = ws;
  j["f"] = p.vacuum_poly;
  j["ordinary"] = p.ordinary;
  return j;
}

ordered_json payload_json(const FusePayload& p) {
  ordered_json j;
  j["w1"] = weight_row_json(p.w1);
  j["w2"] = weight_row_json(p.w2);
  ordered_json c = ordered_json::array(), o = ordered_json::array();
  for (const auto& w : p.closed) c.push_back(weight_row_json(w));
  for (const auto& w : p.oracle) o.push_back(weight_row_json(w));
  j["closed"] = c;
  j["oracle"] = o;
  j["agree"] = p.agree;
  return j;
}

ordered_json payload_json(const TablePayload& p) {
  ordered_json j;
  ordered_json ws = ordered_json::array();
  for (const auto& w : p.weights) ws.push_back(weight_row_json(w));
  j["weights"] = ws;
  ordered_json cells = ordered_json::array();
  for (const auto& c : p.cells) {
    ordered_json sums = ordered_json::array();
    for (const auto& w : c.summands) sums.push_back(weight_row_json(w));
    cells.push_back(ordered_json{{"w1", weight_row_json(c.w1)},
                                 {"w2", weight_row_json(c.w2)},
                                 {"summands", sums}});
  }
  j["cells"] = cells;
  j["ring_checks"] = ordered_json{{"commutative", p.checks.commutative},
                                  {"vacuum_unit", p.checks.vacuum_unit},
                                  {"closure", p.checks.closure},
                                  {"associative", p.checks.associative},
                                  {"associative_asserted", p.checks.associative_asserted},
                                  {"detail", p.checks.detail}};
  return j;
}

ordered_json payload_json(const VerifyPayload& p) {
  ordered_json j;
  j["suite"] = p.suite;
  j["bounds"] = ordered_json{{"max_pq", p.max_pq}, {"depth", p.depth},
                             {"gamma_max", p.gamma_max}};
  ordered_json lines = ordered_json::array();
  for (const auto& l : p.lines)
    lines.push_back(ordered_json{{"instance", l.instance}, {"status", l.status},
                                 {"detail", l.detail}});
  j["lines"] = lines;
  j["summary"] = ordered_json{{"passed", p.passed}, {"failed", p.failed},
                              {"skipped", p.skipped}};
  return j;
}

std::string render_json(const ReportDocument& d) {
  ordered_json j;
  j["p"] = d.p;
  j["q"] = d.q;
  j["level"] = d.level;
  j["command"] = d.command;
  std::visit(
      [&](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, std::monostate>)
          j["payload"] = nullptr;
        else
          j["payload"] = payload_json(p);
      },
      d.payload);
  j["status"] = status_str(d.status);
  if (!d.message.empty()) j["message"] = d.message;
  return j.dump(2) + "\n";
}

std::string render_csv(const ReportDocument& d) {
  std::ostringstream os;
  os << "# command=" << d.command << " p=" << d.p << " q=" << d.q << " level=" << d.level
     << " status=" << status_str(d.status) << "\n";
  if (!d.message.empty()) os << "# " << d.message << "\n";
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, WeightsPayload>) {
          os << "m,s,j\n";
          for (const auto& w : p.weights)
            os << w.m << "," << w.s << "," << csv_escape(w.j) << "\n";
        } else if constexpr (std::is_same_v<T, FusePayload>) {
          os << "m1,s1,m2,s2,closed,oracle,agree\n";
          os << p.w1.m << "," << p.w1.s << "," << p.w2.m << "," << p.w2.s << ","
             << summands_str(p.closed) << "," << summands_str(p.oracle) << ","
             << (p.agree ? "true" : "false") << "\n";
        } else if constexpr (std::is_same_v<T, TablePayload>) {
          os << "w1,w2,summands\n";
          for (const auto& c : p.cells)
            os << "(" << c.w1.m << ";" << c.w1.s << ")"
               << ",(" << c.w2.m << ";" << c.w2.s << ")"
               << "," << summands_str(c.summands) << "\n";
        } else if constexpr (std::is_same_v<T, VerifyPayload>) {
          os << "instance,status,detail\n";
          for (const auto& l : p.lines)
            os << csv_escape(l.instance) << "," << l.status << "," << csv_escape(l.detail)
               << "\n";
        }
      },
      d.payload);
  return os.str();
}

std::string render_tex(const ReportDocument& d) {
  std::ostringstream os;
  os << "% command=" << d.command << " p=" << d.p << " q=" << d.q << " level="
     << tex_rational(d.level) << " status=" << status_str(d.status) << "\n";
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, WeightsPayload>) {
          os << "\\begin{tabular}{rrl}\n$m$ & $s$ & $j$ \\\\\n\\hline\n";
          for (const auto& w : p.weights)
            os << w.m << " & " << w.s << " & $" << tex_rational(w.j) << "$ \\\\\n";
          os << "\\end{tabular}\n";
        } else if constexpr (std::is_same_v<T, FusePayload>) {
          os << "\\begin{tabular}{llll}\n$w_1$ & $w_2$ & closed & oracle \\\\\n\\hline\n";
          os << "$(" << p.w1.m << "," << p.w1.s << ")$ & $(" << p.w2.m << "," << p.w2.s
             << ")$ & $" << summands_str(p.closed) << "$ & $" << summands_str(p.oracle)
             << "$ \\\\\n\\end{tabular}\n";
        } else if constexpr (std::is_same_v<T, TablePayload>) {
          os << "\\begin{tabular}{lll}\n$w_1$ & $w_2$ & $w_1 \\boxtimes w_2$ \\\\\n\\hline\n";
          for (const auto& c : p.cells)
            os << "$(" << c.w1.m << "," << c.w1.s << ")$ & $(" << c.w2.m << "," << c.w2.s
               << ")$ & $" << summands_str(c.summands) << "$ \\\\\n";
          os << "\\end{tabular}\n";
        } else if constexpr (std::is_same_v<T, VerifyPayload>) {
          os << "\\begin{tabular}{lll}\ninstance & status & detail \\\\\n\\hline\n";
          for (const auto& l : p.lines)
            os << l.instance << " & " << l.status << " & " << l.detail << " \\\\\n";
          os << "\\end{tabular}\n";
        }
      },
      d.payload);
  return os.str();
}

void fill_pair_meta(ReportDocument& d, long p, long q, const PairValidation& v) {
  d.p = p;
  d.q = q;
  if (v.ok()) d.level = v.pair->level().str();
}

}  // namespace

std::string ReportDocument::render(DocFormat fmt) const {
  switch (fmt) {
    case DocFormat::Json: return render_json(*this);
    case DocFormat::Csv: return render_csv(*this);
    case DocFormat::Tex: return render_tex(*this);
  }
  return {};
}

ReportDocument doc_weights(long p, long q) {
  ReportDocument d;
  d.command = "weights";
  const auto v = validate_pair(p, q);
  fill_pair_meta(d, p, q, v);
  WeightsPayload pl;
  pl.valid = v.ok();
  pl.violations = v.violations;
  if (!v.ok()) {
    d.status = DocStatus::Fail;
    d.exit_code = 2;
    d.message = "invalid pair:";
    for (const auto& viol : v.violations) d.message += " " + viol + ";";
    d.payload = std::move(pl);
    return d;
  }
  const auto& pr = *v.pair;
  pl.weights = rows_of(pr, enumerate_weights(pr));
  pl.vacuum_poly = vacuum_polynomial(pr).str();
  pl.ordinary = ordinary_weights(pr);
  d.payload = std::move(pl);
  return d;
}

namespace {

// Resolves CLI (m, s) arguments to a grid weight, reporting precise failures.
std::optional<AdmissibleWeight> check_weight(const AdmissiblePair& pr, long m, long s,
                                             std::string& err) {
  if (m < 1 || m > pr.p - 1 || s < 0 || s > pr.q - 1 || (m + s) % 2 != 1) {
    err = "weight (" + std::to_string(m) + "," + std::to_string(s) +
          ") is not on the admissible grid of (p,q)=(" + std::to_string(pr.p) + "," +
          std::to_string(pr.q) + ")";
    return std::nullopt;
  }
  return AdmissibleWeight{m, s};
}

}  // namespace

ReportDocument doc_fuse(long p, long q, long m1, long s1, long m2, long s2) {
  ReportDocument d;
  d.command = "fuse";
  const auto v = validate_pair(p, q);
  fill_pair_meta(d, p, q, v);
  if (!v.ok()) {
    d.status = DocStatus::Fail;
    d.exit_code = 2;
    d.message = "invalid pair:";
    for (const auto& viol : v.violations) d.message += " " + viol + ";";
    return d;
  }
  const auto& pr = *v.pair;
  std::string err;
  const auto w1 = check_weight(pr, m1, s1, err);
  const auto w2 = w1 ? check_weight(pr, m2, s2, err) : std::nullopt;
  if (!w1 || !w2) {
    d.status = DocStatus::Fail;
    d.exit_code = 2;
    d.message = err;
    return d;
  }
  FusePayload pl;
  pl.w1 = row_of(pr, *w1);
  pl.w2 = row_of(pr, *w2);
  try {
    const auto closed = fuse_closed(pr, *w1, *w2);
    const auto oracle = fuse_oracle(pr, *w1, *w2);
    pl.closed = rows_of(pr, closed.summands);
    pl.oracle = rows_of(pr, oracle.summands);
    pl.agree = closed == oracle;
    if (!pl.agree) {
      d.status = DocStatus::Fail;
      d.exit_code = 3;
      d.message = "closed-form and oracle fusion disagree";
    }
  } catch (const TheoremError& e) {
    d.status = DocStatus::Fail;
    d.exit_code = 3;
    d.message = e.what();
  }
  d.payload = std::move(pl);
  return d;
}

ReportDocument doc_table(long p, long q, unsigned workers) {
  ReportDocument d;
  d.command = "table";
  const auto v = validate_pair(p, q);
  fill_pair_meta(d, p, q, v);
  if (!v.ok()) {
    d.status = DocStatus::Fail;
    d.exit_code = 2;
    d.message = "invalid pair:";
    for (const auto& viol : v.violations) d.message += " " + viol + ";";
    return d;
  }
  const auto& pr = *v.pair;
  TablePayload pl;
  try {
    const auto table = fusion_table(pr, workers);
    pl.weights = rows_of(pr, table.weights);
    for (std::size_t i = 0; i < table.weights.size(); ++i)
      for (std::size_t k = 0; k < table.weights.size(); ++k)
        pl.cells.push_back({row_of(pr, table.weights[i]), row_of(pr, table.weights[k]),
                            rows_of(pr, table.cells[i][k].summands)});
    pl.checks = ring_checks(table);
    if (!pl.checks.asserted_ok()) {
      d.status = DocStatus::Fail;
      d.exit_code = 3;
      d.message = "ring checks failed: " + pl.checks.detail;
    } else if (!pl.checks.associative && !pl.checks.associative_asserted) {
      d.status = DocStatus::ReportOnly;
      d.message = "associativity (report-only) did not hold: " + pl.checks.detail;
    }
  } catch (const TheoremError& e) {
    d.status = DocStatus::Fail;
    d.exit_code = 3;
    d.message = e.what();
  }
  d.payload = std::move(pl);
  return d;
}

ReportDocument doc_verify(const VerifyOptions& opts) {
  ReportDocument d;
  d.command = "verify";
  VerifyPayload pl;
  pl.suite = opts.suite;
  pl.depth = opts.depth;
  pl.gamma_max = opts.gamma_max;

  const bool all = opts.suite == "all";
  bool known = all;
  auto append = [&](std::vector<VerifyLine> lines) {
    for (auto& l : lines) pl.lines.push_back(std::move(l));
  };
  if (all || opts.suite == "pq") {
    known = true;
    append(pq_suite(opts.gamma_max));
  }
  if (all || opts.suite == "factorization") {
    known = true;
    append(factorization_suite());
  }
  if (all || opts.suite == "projection") {
    known = true;
    const long bound = opts.max_pq > 0 ? opts.max_pq : 32;
    pl.max_pq = bound;
    append(projection_suite(bound, opts.workers));
  }
  if (all || opts.suite == "singular") {
    known = true;
    const long bound = opts.max_pq > 0 ? opts.max_pq : 32;
    pl.max_pq = bound;
    append(singular_suite(bound, opts.depth, opts.workers));
  }
  if (all || opts.suite == "oracle") {
    known = true;
    const long bound = opts.max_pq > 0 ? opts.max_pq : 81;
    pl.max_pq = bound;
    append(oracle_suite(bound, opts.workers));
  }
  if (!known) {
    d.status = DocStatus::Fail;
    d.exit_code = 2;
    d.message = "unknown suite '" + opts.suite +
                "' (expected pq|factorization|projection|singular|oracle|all)";
    d.payload = std::move(pl);
    return d;
  }
  for (const auto& l : pl.lines) {
    if (l.status == "pass") ++pl.passed;
    else if (l.status == "fail") ++pl.failed;
    else ++pl.skipped;
  }
  if (pl.failed > 0) {
    d.status = DocStatus::Fail;
    d.exit_code = 1;
    d.message = std::to_string(pl.failed) + " asserted check(s) failed";
  }
  d.payload = std::move(pl);
  return d;
}

}  // namespace osp12
