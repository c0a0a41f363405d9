#include "stanleylab/json_io.hpp"

#include "stanleylab/error.hpp"

namespace stanleylab {

namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::Stanley, "stanley"},
    {Family::Dyck, "dyck"},
    {Family::PeaklessMotzkin, "peaklessMotzkin"},
    {Family::Fountain, "fountain"},
    {Family::Parallelogram, "parallelogram"},
};

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::pair<int, int>> int_pairs(const Json& arr, const char* key) {
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be an array");
  std::vector<std::pair<int, int>> out;
  for (const Json& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" entries must be integer pairs");
    }
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e.name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& e : kFamilies) {
    if (name == e.name) return e.family;
  }
  throw Error(ErrorCode::ParseError, "unknown family " + std::string(name));
}

Json to_json(const Object& obj) {
  struct Visitor {
    Json operator()(const StanleyPolyomino& p) const {
      Json rows = Json::array();
      for (const Row& r : p.rows()) rows.push_back({r.start, r.len});
      return {{"rows", rows}};
    }
    Json operator()(const DyckPath& d) const { return {{"word", d.word()}}; }
    Json operator()(const MotzkinPath& m) const { return {{"word", m.word()}}; }
    Json operator()(const CoinFountain& c) const { return {{"diagonals", c.diagonals()}}; }
    Json operator()(const ParallelogramPolyomino& p) const {
      Json cols = Json::array();
      for (const Column& c : p.columns()) cols.push_back({c.bottom, c.height});
      return {{"columns", cols}};
    }
  };
  return std::visit(Visitor{}, obj);
}

Object object_from_json(Family family, const Json& j) {
  switch (family) {
    case Family::Stanley: {
      std::vector<Row> rows;
      for (auto [s, l] : int_pairs(field(j, "rows"), "rows")) rows.push_back({s, l});
      return make_stanley(std::move(rows));
    }
    case Family::Dyck:
    case Family::PeaklessMotzkin: {
      const Json& w = field(j, "word");
      if (!w.is_string()) throw Error(ErrorCode::ParseError, "\"word\" must be a string");
      if (family == Family::Dyck) return make_dyck(w.get<std::string>());
      return make_motzkin(w.get<std::string>());
    }
    case Family::Fountain: {
      const Json& d = field(j, "diagonals");
      if (!d.is_array()) throw Error(ErrorCode::ParseError, "\"diagonals\" must be an array");
      std::vector<int> diags;
      for (const Json& x : d) {
        if (!x.is_number_integer()) throw Error(ErrorCode::ParseError, "diagonal sizes must be integers");
        diags.push_back(x.get<int>());
      }
      return make_fountain(std::move(diags));
    }
    case Family::Parallelogram: {
      std::vector<Column> cols;
      for (auto [b, h] : int_pairs(field(j, "columns"), "columns")) cols.push_back({b, h});
      return make_parallelogram(std::move(cols));
    }
  }
  throw Error(ErrorCode::ParseError, "unknown family");
}

Json to_json(const StatRecord& stats) {
  Json j = Json::object();
  for (const auto& [k, v] : stats) j[k] = v;
  return j;
}

Json to_json(const Series& s) {
  const VarSpace& space = s.space();
  Json j;
  j["vars"] = space.names();
  j["grade"] = s.grade();
  j["order"] = s.order();
  Json laurent = Json::array();
  Json caps = Json::object();
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.is_laurent(i)) laurent.push_back(space.name(i));
    if (i != s.grade_index() && s.bounds()[i] >= 0) caps[space.name(i)] = s.bounds()[i];
  }
  if (!laurent.empty()) j["laurent"] = laurent;
  if (!caps.empty()) j["caps"] = caps;
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) {
    terms.push_back({{"e", std::vector<int>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(space.size()))},
                     {"c", c.get_str()}});
  }
  j["terms"] = terms;
  return j;
}

Series series_from_json(const Json& j) {
  try {
    auto names = field(j, "vars").get<std::vector<std::string>>();
    std::vector<std::string> laurent;
    if (j.contains("laurent")) laurent = j.at("laurent").get<std::vector<std::string>>();
    auto space = std::make_shared<const VarSpace>(names, laurent);
    Series s(space, field(j, "grade").get<std::string>(), field(j, "order").get<int>());
    if (j.contains("caps")) {
      for (const auto& [name, cap] : j.at("caps").items()) s = s.with_cap(name, cap.get<int>());
    }
    Series::TermMap terms;
    for (const Json& t : field(j, "terms")) {
      auto e = field(t, "e").get<std::vector<int>>();
      if (e.size() != names.size()) throw Error(ErrorCode::ParseError, "exponent vector has the wrong length");
      Exponents ex{};
      ex.fill(0);
      std::copy(e.begin(), e.end(), ex.begin());
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (ex[i] < 0 && !space->is_laurent(i)) throw Error(ErrorCode::ParseError, "negative exponent of " + names[i]);
      }
      Rational c(field(t, "c").get<std::string>());
      c.canonicalize();
      terms[ex] += c;
    }
    return s.with_terms(std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, std::string("bad rational: ") + e.what());
  }
}

}  // namespace stanleylab
