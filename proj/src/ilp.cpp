#include "payouts/ilp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace payouts {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Emits "name: term + term - term <relation> rhs" with line wrapping.
class RowWriter {
 public:
  RowWriter(std::ostream& out, const std::string& name) : out_(out) {
    line_ = " " + name + ":";
  }
  void term(double coeff, const std::string& var) {
    std::string piece;
    if (coeff < 0)
      piece = " - " + fmt_double(-coeff) + " " + var;
    else
      piece = (first_ ? " " : " + ") + fmt_double(coeff) + " " + var;
    first_ = false;
    if (line_.size() + piece.size() > 200) {
      out_ << line_ << "\n";
      line_ = " ";
    }
    line_ += piece;
  }
  void finish(const std::string& relation, const std::string& rhs) {
    out_ << line_ << " " << relation << " " << rhs << "\n";
  }
  void finish() { out_ << line_ << "\n"; }

 private:
  std::ostream& out_;
  std::string line_;
  bool first_ = true;
};

std::string strip_index_suffix(const std::string& name) {
  std::size_t end = name.size();
  while (true) {
    std::size_t pos = end;
    while (pos > 0 && std::isdigit(static_cast<unsigned char>(name[pos - 1]))) --pos;
    if (pos == end || pos == 0 || name[pos - 1] != '_') break;
    end = pos - 1;
  }
  return name.substr(0, end);
}

bool looks_like_var(const std::string& token) {
  return token.rfind("x_", 0) == 0 || token.rfind("y_", 0) == 0;
}

}  // namespace

double IlpModel::objective_coeff(std::int64_t i, std::int64_t k) const {
  const double d = ideal[static_cast<std::size_t>(i - 1)] -
                   static_cast<double>(prizes[static_cast<std::size_t>(k - 1)]);
  return d * d;
}

std::int64_t IlpRowCounts::total() const {
  return monotonicity + prize_pool + bucket_size + one_bucket + one_prize + consistency;
}

IlpRowCounts row_counts(const IlpModel& model) {
  IlpRowCounts c;
  c.monotonicity = model.buckets - 1;
  c.prize_pool = 1;
  c.bucket_size = model.buckets - 1;
  c.one_bucket = model.winners;
  c.one_prize = model.buckets;
  c.consistency = model.winners * model.buckets * model.prize_count;
  return c;
}

PrizeLadder default_ladder(const ContestSpec& spec) {
  PrizeLadder ladder;
  ladder.prizes = enumerate_nice(std::max<Money>(1, spec.min_payout), spec.top_prize);
  std::reverse(ladder.prizes.begin(), ladder.prizes.end());
  return ladder;
}

IlpModel build_ilp(const ContestSpec& spec, const IdealCurve& curve,
                   const PrizeLadder& ladder, const IlpBuildLimits& limits) {
  validate_spec(spec);
  if (static_cast<std::int64_t>(curve.payouts.size()) != spec.winners)
    throw std::invalid_argument("ilp: curve length must equal winners");
  if (ladder.prizes.empty()) throw std::invalid_argument("ilp: empty prize ladder");
  for (std::size_t k = 0; k < ladder.prizes.size(); ++k) {
    if (!is_nice(ladder.prizes[k]))
      throw std::invalid_argument("ilp: ladder prize " +
                                  std::to_string(ladder.prizes[k]) + " is not nice");
    if (k > 0 && ladder.prizes[k] >= ladder.prizes[k - 1])
      throw std::invalid_argument("ilp: ladder must be strictly decreasing");
  }
  if (ladder.prizes.back() < spec.min_payout)
    throw std::invalid_argument("ilp: ladder bottom is below the minimum payout");

  IlpModel model;
  model.winners = spec.winners;
  model.buckets = spec.max_buckets;
  model.prize_count = static_cast<std::int64_t>(ladder.prizes.size());
  model.prize_pool = spec.prize_pool;
  model.ideal = curve.payouts;
  model.prizes = ladder.prizes;
  if (model.contestant_vars() > limits.max_contestant_vars)
    throw std::runtime_error("ilp: model exceeds the variable budget");
  return model;
}

IlpModel build_ilp(const ContestSpec& spec, const IdealCurve& curve) {
  return build_ilp(spec, curve, default_ladder(spec));
}

std::string contestant_var_name(std::int64_t i, std::int64_t j, std::int64_t k) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
}

std::string aux_var_name(std::int64_t j, std::int64_t k) {
  return "y_" + std::to_string(j) + "_" + std::to_string(k);
}

void write_lp(const IlpModel& model, std::ostream& out) {
  const std::int64_t n = model.winners, r = model.buckets, m = model.prize_count;

  out << "Minimize\n";
  {
    RowWriter row(out, "obj");
    for (std::int64_t i = 1; i <= n; ++i)
      for (std::int64_t j = 1; j <= r; ++j)
        for (std::int64_t k = 1; k <= m; ++k)
          row.term(model.objective_coeff(i, k), contestant_var_name(i, j, k));
    row.finish();
  }

  out << "Subject To\n";
  for (std::int64_t j = 1; j + 1 <= r; ++j) {
    RowWriter row(out, "mono_" + std::to_string(j));
    for (std::int64_t k = 1; k <= m; ++k)
      row.term(static_cast<double>(k) + 0.5, aux_var_name(j, k));
    for (std::int64_t k = 1; k <= m; ++k)
      row.term(-static_cast<double>(k), aux_var_name(j + 1, k));
    row.finish("<=", "0");
  }
  {
    RowWriter row(out, "pool");
    for (std::int64_t i = 1; i <= n; ++i)
      for (std::int64_t j = 1; j <= r; ++j)
        for (std::int64_t k = 1; k <= m; ++k)
          row.term(static_cast<double>(model.prizes[static_cast<std::size_t>(k - 1)]),
                   contestant_var_name(i, j, k));
    row.finish("=", std::to_string(model.prize_pool));
  }
  for (std::int64_t j = 1; j + 1 <= r; ++j) {
    RowWriter row(out, "size_mono_" + std::to_string(j));
    for (std::int64_t i = 1; i <= n; ++i)
      for (std::int64_t k = 1; k <= m; ++k)
        row.term(1.0, contestant_var_name(i, j, k));
    for (std::int64_t i = 1; i <= n; ++i)
      for (std::int64_t k = 1; k <= m; ++k)
        row.term(-1.0, contestant_var_name(i, j + 1, k));
    row.finish("<=", "0");
  }
  for (std::int64_t i = 1; i <= n; ++i) {
    RowWriter row(out, "winner_" + std::to_string(i));
    for (std::int64_t j = 1; j <= r; ++j)
      for (std::int64_t k = 1; k <= m; ++k)
        row.term(1.0, contestant_var_name(i, j, k));
    row.finish("=", "1");
  }
  for (std::int64_t j = 1; j <= r; ++j) {
    RowWriter row(out, "bucket_prize_" + std::to_string(j));
    for (std::int64_t k = 1; k <= m; ++k) row.term(1.0, aux_var_name(j, k));
    row.finish("<=", "1");
  }
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = 1; j <= r; ++j)
      for (std::int64_t k = 1; k <= m; ++k) {
        RowWriter row(out, "consistency_" + std::to_string(i) + "_" +
                               std::to_string(j) + "_" + std::to_string(k));
        row.term(1.0, aux_var_name(j, k));
        row.term(-1.0, contestant_var_name(i, j, k));
        row.finish(">=", "0");
      }

  out << "Binary\n";
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = 1; j <= r; ++j)
      for (std::int64_t k = 1; k <= m; ++k)
        out << " " << contestant_var_name(i, j, k) << "\n";
  for (std::int64_t j = 1; j <= r; ++j)
    for (std::int64_t k = 1; k <= m; ++k) out << " " << aux_var_name(j, k) << "\n";
  out << "End\n";
}

std::string to_lp_string(const IlpModel& model) {
  std::ostringstream out;
  write_lp(model, out);
  return out.str();
}

LpSummary parse_lp(std::istream& in) {
  LpSummary summary;
  enum class Section { preamble, objective, constraints, binary, done };
  Section section = Section::preamble;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "Minimize") {
      section = Section::objective;
      continue;
    }
    if (first == "Subject") {
      section = Section::constraints;
      continue;
    }
    if (first == "Binary") {
      section = Section::binary;
      continue;
    }
    if (first == "End") {
      section = Section::done;
      continue;
    }

    if (section == Section::objective || section == Section::constraints) {
      std::string token = first;
      bool row_start = false;
      std::string row_name;
      if (token.back() == ':') {
        row_start = true;
        row_name = token.substr(0, token.size() - 1);
      }
      if (section == Section::constraints && row_start)
        ++summary.rows_by_family[strip_index_suffix(row_name)];
      auto count_token = [&](const std::string& t) {
        if (section == Section::objective && looks_like_var(t))
          ++summary.objective_terms;
      };
      if (!row_start) count_token(token);
      while (ls >> token) count_token(token);
    } else if (section == Section::binary) {
      if (looks_like_var(first)) ++summary.binary_vars;
    }
  }
  for (const auto& [name, count] : summary.rows_by_family)
    summary.constraint_rows += count;
  return summary;
}

Assignment read_solution(std::istream& in) {
  Assignment out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string name, value;
    if (!(ls >> name)) continue;
    if (name[0] == '#') continue;
    if (!(ls >> value))
      throw std::invalid_argument("solution line " + std::to_string(line_no) +
                                  ": missing value");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || (v != 0 && v != 1))
      throw std::invalid_argument("solution line " + std::to_string(line_no) +
                                  ": value must be the integer 0 or 1");
    out[name] = static_cast<int>(v);
  }
  return out;
}

namespace {

// Dense views over an assignment, with full-coverage validation.
struct AssignmentView {
  std::int64_t n, r, m;
  std::vector<int> x;  // (i-1)*r*m + (j-1)*m + (k-1)
  std::vector<int> y;  // (j-1)*m + (k-1)

  AssignmentView(const IlpModel& model, const Assignment& a)
      : n(model.winners), r(model.buckets), m(model.prize_count) {
    x.resize(static_cast<std::size_t>(n * r * m));
    y.resize(static_cast<std::size_t>(r * m));
    std::int64_t seen = 0;
    for (std::int64_t i = 1; i <= n; ++i)
      for (std::int64_t j = 1; j <= r; ++j)
        for (std::int64_t k = 1; k <= m; ++k) {
          auto it = a.find(contestant_var_name(i, j, k));
          if (it == a.end())
            throw std::invalid_argument("assignment missing variable " +
                                        contestant_var_name(i, j, k));
          x[idx(i, j, k)] = it->second;
          ++seen;
        }
    for (std::int64_t j = 1; j <= r; ++j)
      for (std::int64_t k = 1; k <= m; ++k) {
        auto it = a.find(aux_var_name(j, k));
        if (it == a.end())
          throw std::invalid_argument("assignment missing variable " +
                                      aux_var_name(j, k));
        y[ydx(j, k)] = it->second;
        ++seen;
      }
    for (const auto& [name, value] : a) {
      if (value != 0 && value != 1)
        throw std::invalid_argument("assignment value for " + name +
                                    " must be 0 or 1");
    }
    (void)seen;
  }

  std::size_t idx(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return static_cast<std::size_t>((i - 1) * r * m + (j - 1) * m + (k - 1));
  }
  std::size_t ydx(std::int64_t j, std::int64_t k) const {
    return static_cast<std::size_t>((j - 1) * m + (k - 1));
  }
};

}  // namespace

std::vector<std::string> check_assignment(const IlpModel& model,
                                          const Assignment& assignment) {
  const AssignmentView v(model, assignment);
  const std::int64_t n = model.winners, r = model.buckets, m = model.prize_count;
  std::vector<std::string> violated;

  for (std::int64_t j = 1; j + 1 <= r; ++j) {
    double lhs = 0.0;
    for (std::int64_t k = 1; k <= m; ++k) {
      lhs += (static_cast<double>(k) + 0.5) * v.y[v.ydx(j, k)];
      lhs -= static_cast<double>(k) * v.y[v.ydx(j + 1, k)];
    }
    if (lhs > 0.0) violated.push_back("mono_" + std::to_string(j));
  }
  {
    Money paid = 0;
    for (std::int64_t i = 1; i <= n; ++i)
      for (std::int64_t j = 1; j <= r; ++j)
        for (std::int64_t k = 1; k <= m; ++k)
          if (v.x[v.idx(i, j, k)])
            paid += model.prizes[static_cast<std::size_t>(k - 1)];
    if (paid != model.prize_pool) violated.push_back("pool");
  }
  for (std::int64_t j = 1; j + 1 <= r; ++j) {
    std::int64_t here = 0, next = 0;
    for (std::int64_t i = 1; i <= n; ++i)
      for (std::int64_t k = 1; k <= m; ++k) {
        here += v.x[v.idx(i, j, k)];
        next += v.x[v.idx(i, j + 1, k)];
      }
    if (here > next) violated.push_back("size_mono_" + std::to_string(j));
  }
  for (std::int64_t i = 1; i <= n; ++i) {
    std::int64_t assigned = 0;
    for (std::int64_t j = 1; j <= r; ++j)
      for (std::int64_t k = 1; k <= m; ++k) assigned += v.x[v.idx(i, j, k)];
    if (assigned != 1) violated.push_back("winner_" + std::to_string(i));
  }
  for (std::int64_t j = 1; j <= r; ++j) {
    std::int64_t prizes_set = 0;
    for (std::int64_t k = 1; k <= m; ++k) prizes_set += v.y[v.ydx(j, k)];
    if (prizes_set > 1) violated.push_back("bucket_prize_" + std::to_string(j));
  }
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = 1; j <= r; ++j)
      for (std::int64_t k = 1; k <= m; ++k)
        if (v.x[v.idx(i, j, k)] > v.y[v.ydx(j, k)])
          violated.push_back("consistency_" + std::to_string(i) + "_" +
                             std::to_string(j) + "_" + std::to_string(k));
  return violated;
}

PayoutStructure import_solution(const IlpModel& model, const Assignment& assignment) {
  const AssignmentView v(model, assignment);
  const std::int64_t n = model.winners, r = model.buckets, m = model.prize_count;

  std::vector<std::int32_t> bucket_prize(static_cast<std::size_t>(r), -1);
  for (std::int64_t j = 1; j <= r; ++j)
    for (std::int64_t k = 1; k <= m; ++k)
      if (v.y[v.ydx(j, k)]) {
        if (bucket_prize[static_cast<std::size_t>(j - 1)] >= 0)
          throw std::invalid_argument(
              "import: One Prize Per Bucket violated at bucket " + std::to_string(j));
        bucket_prize[static_cast<std::size_t>(j - 1)] = static_cast<std::int32_t>(k);
      }

  std::vector<std::int64_t> bucket_size(static_cast<std::size_t>(r), 0);
  for (std::int64_t i = 1; i <= n; ++i) {
    std::int64_t assigned = 0;
    for (std::int64_t j = 1; j <= r; ++j)
      for (std::int64_t k = 1; k <= m; ++k)
        if (v.x[v.idx(i, j, k)]) {
          ++assigned;
          if (bucket_prize[static_cast<std::size_t>(j - 1)] != k)
            throw std::invalid_argument("import: Prize Consistency violated at x_" +
                                        std::to_string(i) + "_" + std::to_string(j) +
                                        "_" + std::to_string(k));
          ++bucket_size[static_cast<std::size_t>(j - 1)];
        }
    if (assigned != 1)
      throw std::invalid_argument("import: One Bucket Per Winner violated at winner " +
                                  std::to_string(i));
  }

  bool seen_used = false;
  PayoutStructure out;
  for (std::int64_t j = 1; j <= r; ++j) {
    const bool used = bucket_size[static_cast<std::size_t>(j - 1)] > 0;
    if (used) {
      seen_used = true;
      out.buckets.push_back(
          {bucket_size[static_cast<std::size_t>(j - 1)],
           model.prizes[static_cast<std::size_t>(
               bucket_prize[static_cast<std::size_t>(j - 1)] - 1)]});
    } else if (seen_used) {
      throw std::invalid_argument(
          "import: unused buckets must be the lowest-numbered ones (bucket " +
          std::to_string(j) + " is empty after a used bucket)");
    }
  }
  if (out.buckets.empty()) throw std::invalid_argument("import: no bucket is used");
  return out;
}

Assignment structure_to_assignment(const IlpModel& model,
                                   const PayoutStructure& structure) {
  const std::int64_t n = model.winners, r = model.buckets, m = model.prize_count;
  const std::int64_t c = static_cast<std::int64_t>(structure.buckets.size());
  if (c > r) throw std::invalid_argument("encode: structure uses too many buckets");
  if (structure.winner_count() != n)
    throw std::invalid_argument("encode: structure must cover exactly N winners");

  Assignment out;
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = 1; j <= r; ++j)
      for (std::int64_t k = 1; k <= m; ++k) out[contestant_var_name(i, j, k)] = 0;
  for (std::int64_t j = 1; j <= r; ++j)
    for (std::int64_t k = 1; k <= m; ++k) out[aux_var_name(j, k)] = 0;

  // Real buckets take the last slots so any empty ones are lowest-numbered.
  const std::int64_t offset = r - c;
  std::int64_t place = 1;
  for (std::int64_t t = 0; t < c; ++t) {
    const Bucket& b = structure.buckets[static_cast<std::size_t>(t)];
    const auto it = std::find(model.prizes.begin(), model.prizes.end(), b.prize);
    if (it == model.prizes.end())
      throw std::invalid_argument("encode: prize " + std::to_string(b.prize) +
                                  " is not on the ladder");
    const std::int64_t k = std::distance(model.prizes.begin(), it) + 1;
    const std::int64_t j = offset + t + 1;
    out[aux_var_name(j, k)] = 1;
    for (std::int64_t u = 0; u < b.size; ++u, ++place)
      out[contestant_var_name(place, j, k)] = 1;
  }
  return out;
}

double contiguity_exchange_delta(double pi_i, double pi_j, Money p_high, Money p_low) {
  return -2.0 * (pi_i - pi_j) * static_cast<double>(p_high - p_low);
}

}  // namespace payouts
