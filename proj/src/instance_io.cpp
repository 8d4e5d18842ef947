#include "mglab/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mglab/errors.hpp"
#include "mglab/text.hpp"

namespace mglab {

namespace {

Label parse_label(std::string_view token, std::string_view what) {
  if (token == "+1") return 1;
  if (token == "-1") return -1;
  throw ValidationError("malformed " + std::string(what) + ": expected +1 or -1, got '" +
                        std::string(token) + "'");
}

std::string label_str(Label v) { return v == 1 ? "+1" : "-1"; }

// "name=value" with value after the last '='.
std::pair<std::string_view, std::string_view> split_pair(std::string_view token,
                                                         std::string_view what) {
  auto pos = token.rfind('=');
  if (pos == std::string_view::npos || pos == 0 || pos + 1 == token.size()) {
    throw ValidationError("malformed " + std::string(what) + " entry '" + std::string(token) +
                          "': expected <point>=<value>");
  }
  return {token.substr(0, pos), token.substr(pos + 1)};
}

// The serializer refuses identifiers the line format cannot represent.
void check_id(const std::string& id, std::string_view what) {
  if (id.empty()) {
    throw ValidationError("empty " + std::string(what) + " id");
  }
  if (id == ":" || id == "fixed" || id == "free") {
    throw ValidationError(std::string(what) + " id '" + id + "' collides with a format keyword");
  }
  for (char c : id) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '=' || c == '#') {
      throw ValidationError(std::string(what) + " id '" + id +
                            "' contains a character the text format cannot hold");
    }
  }
}

std::vector<std::string_view> section_body(const std::vector<std::string_view>& tokens,
                                           std::size_t header_len, std::string_view what) {
  if (tokens.size() < header_len + 1 || tokens[header_len] != ":") {
    throw ValidationError("malformed " + std::string(what) + " line: missing ':'");
  }
  return {tokens.begin() + header_len + 1, tokens.end()};
}

}  // namespace

FiniteInstance ParsedInstance::to_instance() const {
  if (!mass) {
    throw ValidationError("instance lacks a mass section");
  }
  if (target && label_prob) {
    throw ValidationError("instance has both a target and a labelprob section");
  }
  if (target) {
    return FiniteInstance(domain, groups, hypotheses, *mass, *target);
  }
  if (label_prob) {
    return FiniteInstance(domain, groups, hypotheses, *mass, *label_prob);
  }
  throw ValidationError("instance lacks a target or labelprob section");
}

ParsedInstance from_instance(const FiniteInstance& inst) {
  ParsedInstance p;
  p.domain = inst.domain();
  p.groups = inst.groups();
  p.hypotheses = inst.hypotheses();
  p.mass = inst.mass();
  if (inst.deterministic_target()) {
    p.target = inst.target();
  } else {
    p.label_prob = inst.label_prob();
  }
  return p;
}

ParsedInstance parse_instance_text(std::string_view text) {
  std::optional<FiniteDomain> domain;
  std::vector<Group> groups;
  std::vector<Hypothesis> hypotheses;
  ParsedInstance out;

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto tokens = split_ws(line);
    const std::string where = "line " + std::to_string(line_no);

    if (tokens[0] == "points") {
      if (domain) throw ValidationError(where + ": duplicate points line");
      std::vector<std::string> names;
      names.reserve(tokens.size() - 1);
      for (std::size_t i = 1; i < tokens.size(); ++i) names.emplace_back(tokens[i]);
      domain = FiniteDomain(std::move(names));
      continue;
    }
    if (!domain) {
      throw ValidationError(where + ": the points line must come first");
    }
    const std::size_t n = domain->size();

    if (tokens[0] == "group") {
      if (tokens.size() < 2) throw ValidationError(where + ": group line lacks an id");
      auto body = section_body(tokens, 2, "group");
      std::vector<PointIndex> members;
      members.reserve(body.size());
      for (auto t : body) members.push_back(domain->index_of(std::string(t)));
      groups.emplace_back(std::string(tokens[1]), std::move(members), *domain);
    } else if (tokens[0] == "hyp") {
      if (tokens.size() < 2) throw ValidationError(where + ": hyp line lacks an id");
      std::string id(tokens[1]);
      auto body = section_body(tokens, 2, "hyp");
      if (!body.empty() && (body[0] == "fixed" || body[0] == "free")) {
        std::vector<std::pair<PointIndex, Label>> fixed;
        std::vector<PointIndex> free_pts;
        int mode = 0;  // 1 = fixed, 2 = free
        for (auto t : body) {
          if (t == "fixed") {
            mode = 1;
          } else if (t == "free") {
            mode = 2;
          } else if (mode == 1) {
            auto [name, val] = split_pair(t, "hyp fixed");
            fixed.emplace_back(domain->index_of(std::string(name)),
                               parse_label(val, "hyp fixed value"));
          } else {
            free_pts.push_back(domain->index_of(std::string(t)));
          }
        }
        Hypothesis h = Hypothesis::block(id, n, fixed);
        if (h.free_points() != free_pts) {
          std::vector<PointIndex> sorted = free_pts;
          std::sort(sorted.begin(), sorted.end());
          sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
          if (h.free_points() != sorted) {
            throw ValidationError(where + ": hyp '" + id +
                                  "': fixed and free parts must partition the domain");
          }
        }
        hypotheses.push_back(std::move(h));
      } else {
        if (body.size() != n) {
          throw ValidationError(where + ": hyp '" + id + "' row must list all " +
                                std::to_string(n) + " points");
        }
        std::vector<Label> values(n);
        for (std::size_t i = 0; i < n; ++i) values[i] = parse_label(body[i], "hyp value");
        hypotheses.push_back(Hypothesis::explicit_fn(id, std::move(values)));
      }
    } else if (tokens[0] == "mass") {
      if (out.mass) throw ValidationError(where + ": duplicate mass line");
      auto body = section_body(tokens, 1, "mass");
      std::vector<double> mass(n, 0.0);
      std::vector<bool> seen(n, false);
      for (auto t : body) {
        auto [name, val] = split_pair(t, "mass");
        PointIndex p = domain->index_of(std::string(name));
        if (seen[p]) throw ValidationError(where + ": mass given twice for '" + std::string(name) + "'");
        seen[p] = true;
        mass[p] = parse_double(val, "mass value");
      }
      for (std::size_t p = 0; p < n; ++p) {
        if (!seen[p]) {
          throw ValidationError(where + ": mass missing for '" + domain->point(p) + "'");
        }
      }
      out.mass = std::move(mass);
    } else if (tokens[0] == "target") {
      if (out.target) throw ValidationError(where + ": duplicate target line");
      auto body = section_body(tokens, 1, "target");
      if (body.size() != n) {
        throw ValidationError(where + ": target row must list all " + std::to_string(n) +
                              " points");
      }
      std::vector<Label> values(n);
      for (std::size_t i = 0; i < n; ++i) values[i] = parse_label(body[i], "target value");
      out.target = std::move(values);
    } else if (tokens[0] == "labelprob") {
      if (out.label_prob) throw ValidationError(where + ": duplicate labelprob line");
      auto body = section_body(tokens, 1, "labelprob");
      if (body.size() != n) {
        throw ValidationError(where + ": labelprob row must list all " + std::to_string(n) +
                              " points");
      }
      std::vector<double> values(n);
      for (std::size_t i = 0; i < n; ++i) values[i] = parse_double(body[i], "labelprob value");
      out.label_prob = std::move(values);
    } else if (tokens[0] == "sample") {
      if (out.sample) throw ValidationError(where + ": duplicate sample line");
      auto body = section_body(tokens, 1, "sample");
      LabeledSample s;
      s.examples.reserve(body.size());
      for (auto t : body) {
        auto [name, val] = split_pair(t, "sample");
        s.examples.emplace_back(domain->index_of(std::string(name)),
                                parse_label(val, "sample label"));
      }
      out.sample = std::move(s);
    } else {
      throw ValidationError(where + ": unknown section '" + std::string(tokens[0]) + "'");
    }
  }

  if (!domain) {
    throw ValidationError("instance text lacks a points line");
  }
  if (out.target && out.label_prob) {
    throw ValidationError("instance has both a target and a labelprob section");
  }
  out.domain = std::move(*domain);
  out.groups = GroupFamily(std::move(groups));
  out.hypotheses = HypothesisClass(std::move(hypotheses));
  return out;
}

std::string serialize_instance(const ParsedInstance& p) {
  std::string out;
  const auto& dom = p.domain;
  out += "points";
  for (const auto& name : dom.points()) {
    check_id(name, "point");
    out += ' ';
    out += name;
  }
  out += '\n';
  for (const auto& g : p.groups.groups()) {
    check_id(g.id(), "group");
    out += "group ";
    out += g.id();
    out += " :";
    for (PointIndex m : g.members()) {
      out += ' ';
      out += dom.point(m);
    }
    out += '\n';
  }
  for (const auto& h : p.hypotheses.members()) {
    check_id(h.id(), "hypothesis");
    out += "hyp ";
    out += h.id();
    out += " :";
    if (h.is_explicit()) {
      for (std::size_t i = 0; i < dom.size(); ++i) {
        out += ' ';
        out += label_str(h.fixed_value(static_cast<PointIndex>(i)));
      }
    } else {
      out += " fixed";
      for (std::size_t i = 0; i < dom.size(); ++i) {
        Label v = h.fixed_value(static_cast<PointIndex>(i));
        if (v != 0) {
          out += ' ';
          out += dom.point(static_cast<PointIndex>(i));
          out += '=';
          out += label_str(v);
        }
      }
      out += " free";
      for (PointIndex f : h.free_points()) {
        out += ' ';
        out += dom.point(f);
      }
    }
    out += '\n';
  }
  if (p.mass) {
    out += "mass :";
    for (std::size_t i = 0; i < dom.size(); ++i) {
      out += ' ';
      out += dom.point(static_cast<PointIndex>(i));
      out += '=';
      out += format_double((*p.mass)[i]);
    }
    out += '\n';
  }
  if (p.target) {
    out += "target :";
    for (Label v : *p.target) {
      out += ' ';
      out += label_str(v);
    }
    out += '\n';
  }
  if (p.label_prob) {
    out += "labelprob :";
    for (double v : *p.label_prob) {
      out += ' ';
      out += format_double(v);
    }
    out += '\n';
  }
  if (p.sample) {
    out += serialize_sample(*p.sample, dom);
  }
  return out;
}

ParsedInstance read_instance_file(const std::string& path) {
  return parse_instance_text(read_text_file(path));
}

void write_instance_file(const std::string& path, const ParsedInstance& p) {
  write_text_file(path, serialize_instance(p));
}

LabeledSample parse_sample_text(std::string_view text, const FiniteDomain& domain) {
  std::optional<LabeledSample> sample;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto tokens = split_ws(line);
    const std::string where = "line " + std::to_string(line_no);
    if (tokens[0] != "sample") {
      throw ValidationError(where + ": expected a sample line");
    }
    if (sample) throw ValidationError(where + ": duplicate sample line");
    auto body = section_body(tokens, 1, "sample");
    LabeledSample s;
    s.examples.reserve(body.size());
    for (auto t : body) {
      auto [name, val] = split_pair(t, "sample");
      s.examples.emplace_back(domain.index_of(std::string(name)),
                              parse_label(val, "sample label"));
    }
    sample = std::move(s);
  }
  if (!sample) {
    throw ValidationError("sample text lacks a sample line");
  }
  return *sample;
}

std::string serialize_sample(const LabeledSample& s, const FiniteDomain& domain) {
  std::string out = "sample :";
  for (auto [p, v] : s.examples) {
    out += ' ';
    out += domain.point(p);
    out += '=';
    out += label_str(v);
  }
  out += '\n';
  return out;
}

LabeledSample read_sample_file(const std::string& path, const FiniteDomain& domain) {
  return parse_sample_text(read_text_file(path), domain);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot write file '" + path + "'");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw ValidationError("failed writing file '" + path + "'");
  }
}

}  // namespace mglab
