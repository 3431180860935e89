#include "payouts/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace payouts {

namespace {

using nlohmann::json;

Money money_field(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer())
    throw std::invalid_argument("spec field '" + key + "' must be an integer");
  return v.get<Money>();
}

LabeledSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("spec document must be an object");
  LabeledSpec out;
  if (j.contains("label")) out.label = j.at("label").get<std::string>();

  ContestSpec& spec = out.spec;
  spec.prize_pool = money_field(j, "prize_pool");
  spec.top_prize = money_field(j, "top_prize");
  spec.winners = money_field(j, "winners");
  spec.max_buckets = money_field(j, "max_buckets");
  if (j.contains("singleton_buckets"))
    spec.singleton_buckets = money_field(j, "singleton_buckets");

  const bool has_min = j.contains("min_payout");
  const bool has_fee = j.contains("entry_fee");
  if (has_min == has_fee)
    throw std::invalid_argument(
        "spec must provide exactly one of min_payout or entry_fee");
  if (has_min) {
    spec.min_payout = money_field(j, "min_payout");
  } else {
    const double fee = j.at("entry_fee").get<double>();
    if (!(fee > 0)) throw std::invalid_argument("entry_fee must be positive");
    spec.min_payout = nice_ceil(1.5 * fee);
  }
  validate_spec(spec);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

LabeledSpec parse_spec_json(const std::string& text) {
  return spec_from_json(json::parse(text));
}

LabeledSpec load_spec_file(const std::string& path) {
  try {
    return parse_spec_json(read_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<LabeledSpec> parse_suite_json(const std::string& text) {
  const json doc = json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("suite document must be an array");
  std::vector<LabeledSpec> out;
  out.reserve(doc.size());
  for (const auto& item : doc) out.push_back(spec_from_json(item));
  return out;
}

std::vector<LabeledSpec> load_suite_file(const std::string& path) {
  try {
    return parse_suite_json(read_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_structure_csv(std::ostream& out, const PayoutStructure& structure) {
  out << "place_from,place_to,prize\n";
  std::int64_t place = 1;
  for (const Bucket& b : structure.buckets) {
    out << place << "," << place + b.size - 1 << "," << b.prize << "\n";
    place += b.size;
  }
}

PayoutStructure read_structure_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "place_from,place_to,prize")
    throw std::invalid_argument("payout csv: bad or missing header");
  PayoutStructure out;
  std::int64_t next_place = 1;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string from_s, to_s, prize_s;
    if (!std::getline(ls, from_s, ',') || !std::getline(ls, to_s, ',') ||
        !std::getline(ls, prize_s))
      throw std::invalid_argument("payout csv line " + std::to_string(line_no) +
                                  ": expected place_from,place_to,prize");
    const std::int64_t from = std::stoll(from_s);
    const std::int64_t to = std::stoll(to_s);
    const Money prize = std::stoll(prize_s);
    if (from != next_place)
      throw std::invalid_argument("payout csv line " + std::to_string(line_no) +
                                  ": places are not contiguous from rank 1");
    if (to < from)
      throw std::invalid_argument("payout csv line " + std::to_string(line_no) +
                                  ": empty place range");
    if (prize < 1)
      throw std::invalid_argument("payout csv line " + std::to_string(line_no) +
                                  ": prize must be >= 1");
    out.buckets.push_back({to - from + 1, prize});
    next_place = to + 1;
  }
  if (out.buckets.empty()) throw std::invalid_argument("payout csv: no rows");
  return out;
}

void write_structure_text(std::ostream& out, const PayoutStructure& structure) {
  out << std::setw(11) << "place_from" << std::setw(11) << "place_to"
      << std::setw(14) << "prize" << "\n";
  std::int64_t place = 1;
  for (const Bucket& b : structure.buckets) {
    out << std::setw(11) << place << std::setw(11) << place + b.size - 1
        << std::setw(14) << b.prize << "\n";
    place += b.size;
  }
  out << std::setw(11) << "total" << std::setw(11) << place - 1 << std::setw(14)
      << structure.total_paid() << "\n";
}

}  // namespace payouts
