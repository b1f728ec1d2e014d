#include "isotool/tu_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace iso {

namespace {

namespace fs = std::filesystem;

std::string location(const fs::path& file, std::size_t line) {
  return file.filename().string() + ":" + std::to_string(line);
}

// Reads all non-empty lines; tolerates \r\n endings, surrounding whitespace
// and trailing blank lines. Blank lines in the middle of a file are rejected
// since every line index is meaningful in this format.
std::vector<std::string> read_lines(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file.string());
  std::vector<std::string> lines;
  std::string line;
  std::size_t blank_run = 0;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) {
      ++blank_run;
      continue;
    }
    if (blank_run > 0) {
      throw ParseError("blank line inside " + file.filename().string());
    }
    lines.push_back(line.substr(start));
  }
  return lines;
}

std::int64_t parse_int(std::string_view text, const fs::path& file,
                       std::size_t line) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("expected integer at " + location(file, line) + ", got '" +
                     std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
      field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t'))
      field.remove_suffix(1);
    out.push_back(field);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<double> parse_vector(std::string_view text, const fs::path& file,
                                 std::size_t line) {
  std::vector<double> out;
  for (std::string_view field : split_commas(text)) {
    double value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
      throw ParseError("expected real number at " + location(file, line) +
                       ", got '" + std::string(field) + "'");
    }
    out.push_back(value);
  }
  return out;
}

std::string shortest_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

Dataset load_dataset(const fs::path& dir, const LoadOptions& options,
                     LoadReport* report) {
  if (!fs::is_directory(dir)) {
    throw ParseError("dataset directory not found: " + dir.string());
  }
  std::string name = dir.filename().string();
  if (name.empty()) name = dir.parent_path().filename().string();

  auto file_for = [&](const std::string& suffix) {
    return dir / (name + suffix);
  };
  const fs::path a_file = file_for("_A.txt");
  const fs::path indicator_file = file_for("_graph_indicator.txt");
  const fs::path labels_file = file_for("_graph_labels.txt");
  for (const fs::path* f : {&a_file, &indicator_file, &labels_file}) {
    if (!fs::exists(*f)) {
      throw ParseError("missing mandatory file " + f->string());
    }
  }

  LoadReport local_report;

  // Node -> graph assignment. Global node ids are 1-based and graphs are
  // numbered 1..N; local ids follow file order within each graph.
  std::vector<std::string> indicator_lines = read_lines(indicator_file);
  const std::size_t total_nodes = indicator_lines.size();
  std::vector<std::uint32_t> graph_of_node(total_nodes);
  std::size_t graph_count = 0;
  for (std::size_t i = 0; i < total_nodes; ++i) {
    std::int64_t gid = parse_int(indicator_lines[i], indicator_file, i + 1);
    if (gid < 1) {
      throw ParseError("graph id must be >= 1 at " +
                       location(indicator_file, i + 1));
    }
    graph_of_node[i] = static_cast<std::uint32_t>(gid - 1);
    graph_count = std::max(graph_count, static_cast<std::size_t>(gid));
  }

  std::vector<std::string> class_lines = read_lines(labels_file);
  if (class_lines.size() < graph_count) {
    throw ParseError(labels_file.filename().string() + " has " +
                     std::to_string(class_lines.size()) +
                     " labels but the indicator references " +
                     std::to_string(graph_count) + " graphs");
  }
  graph_count = std::max(graph_count, class_lines.size());
  std::vector<std::int64_t> class_values;
  class_values.reserve(graph_count);
  for (std::size_t i = 0; i < class_lines.size(); ++i) {
    class_values.push_back(parse_int(class_lines[i], labels_file, i + 1));
  }

  std::vector<std::uint32_t> local_id(total_nodes);
  std::vector<std::uint32_t> node_counts(graph_count, 0);
  for (std::size_t i = 0; i < total_nodes; ++i) {
    local_id[i] = node_counts[graph_of_node[i]]++;
  }

  std::vector<GraphBuilder> builders;
  builders.reserve(graph_count);
  for (std::size_t g = 0; g < graph_count; ++g) {
    builders.emplace_back(node_counts[g]);
    builders.back().multiplicity_as_edge_label(
        options.multiplicity_as_edge_label);
  }

  // Optional per-node files.
  LabelDictionary node_label_dict;
  bool have_node_labels = fs::exists(file_for("_node_labels.txt"));
  if (have_node_labels) {
    const fs::path f = file_for("_node_labels.txt");
    std::vector<std::string> lines = read_lines(f);
    if (lines.size() != total_nodes) {
      throw ParseError(f.filename().string() + " has " +
                       std::to_string(lines.size()) + " lines, expected " +
                       std::to_string(total_nodes));
    }
    std::vector<std::vector<std::int32_t>> per_graph(graph_count);
    for (std::size_t g = 0; g < graph_count; ++g)
      per_graph[g].resize(node_counts[g]);
    for (std::size_t i = 0; i < total_nodes; ++i) {
      std::int32_t id = node_label_dict.intern(parse_int(lines[i], f, i + 1));
      per_graph[graph_of_node[i]][local_id[i]] = id;
    }
    for (std::size_t g = 0; g < graph_count; ++g)
      builders[g].node_labels(std::move(per_graph[g]));
  }
  if (fs::exists(file_for("_node_attributes.txt"))) {
    const fs::path f = file_for("_node_attributes.txt");
    std::vector<std::string> lines = read_lines(f);
    if (lines.size() != total_nodes) {
      throw ParseError(f.filename().string() + " has " +
                       std::to_string(lines.size()) + " lines, expected " +
                       std::to_string(total_nodes));
    }
    std::vector<std::vector<std::vector<double>>> per_graph(graph_count);
    for (std::size_t g = 0; g < graph_count; ++g)
      per_graph[g].resize(node_counts[g]);
    std::size_t arity = 0;
    for (std::size_t i = 0; i < total_nodes; ++i) {
      std::vector<double> row = parse_vector(lines[i], f, i + 1);
      if (i == 0) {
        arity = row.size();
      } else if (row.size() != arity) {
        throw ParseError("ragged attribute row at " + location(f, i + 1) +
                         ": " + std::to_string(row.size()) +
                         " components, expected " + std::to_string(arity));
      }
      per_graph[graph_of_node[i]][local_id[i]] = std::move(row);
    }
    for (std::size_t g = 0; g < graph_count; ++g)
      builders[g].node_attributes(std::move(per_graph[g]));
  }

  // Edges plus their optional per-line files.
  std::vector<std::string> edge_lines = read_lines(a_file);
  LabelDictionary edge_label_dict;
  std::vector<std::string> edge_label_lines;
  if (fs::exists(file_for("_edge_labels.txt"))) {
    edge_label_lines = read_lines(file_for("_edge_labels.txt"));
    if (edge_label_lines.size() != edge_lines.size()) {
      throw ParseError(name + "_edge_labels.txt has " +
                       std::to_string(edge_label_lines.size()) +
                       " lines but " + name + "_A.txt has " +
                       std::to_string(edge_lines.size()));
    }
  }
  std::vector<std::string> edge_attr_lines;
  if (fs::exists(file_for("_edge_attributes.txt"))) {
    edge_attr_lines = read_lines(file_for("_edge_attributes.txt"));
    if (edge_attr_lines.size() != edge_lines.size()) {
      throw ParseError(name + "_edge_attributes.txt has " +
                       std::to_string(edge_attr_lines.size()) +
                       " lines but " + name + "_A.txt has " +
                       std::to_string(edge_lines.size()));
    }
  }

  std::size_t attr_arity = 0;
  for (std::size_t i = 0; i < edge_lines.size(); ++i) {
    std::vector<std::string_view> fields = split_commas(edge_lines[i]);
    if (fields.size() != 2) {
      throw ParseError("expected 'i, j' at " + location(a_file, i + 1));
    }
    std::int64_t a = parse_int(fields[0], a_file, i + 1);
    std::int64_t b = parse_int(fields[1], a_file, i + 1);
    if (a < 1 || b < 1 || a > static_cast<std::int64_t>(total_nodes) ||
        b > static_cast<std::int64_t>(total_nodes)) {
      throw ParseError("node id out of range at " + location(a_file, i + 1));
    }
    std::uint32_t ga = graph_of_node[a - 1], gb = graph_of_node[b - 1];
    if (ga != gb) {
      throw ParseError("edge crosses two graphs at " +
                       location(a_file, i + 1) + ": node " +
                       std::to_string(a) + " is in graph " +
                       std::to_string(ga + 1) + ", node " + std::to_string(b) +
                       " in graph " + std::to_string(gb + 1));
    }
    std::optional<std::int32_t> label;
    if (!edge_label_lines.empty()) {
      label = edge_label_dict.intern(parse_int(
          edge_label_lines[i], file_for("_edge_labels.txt"), i + 1));
    }
    std::optional<std::vector<double>> attr;
    if (!edge_attr_lines.empty()) {
      std::vector<double> row = parse_vector(
          edge_attr_lines[i], file_for("_edge_attributes.txt"), i + 1);
      if (attr_arity == 0 && i == 0) attr_arity = row.size();
      if (i > 0 && row.size() != attr_arity) {
        throw ParseError("ragged attribute row at " +
                         location(file_for("_edge_attributes.txt"), i + 1));
      }
      attr = std::move(row);
    }
    builders[ga].add_edge(local_id[a - 1], local_id[b - 1], label,
                          std::move(attr));
  }

  if (fs::exists(file_for("_graph_attributes.txt"))) {
    local_report.notices.push_back(name +
                                   "_graph_attributes.txt present; ignored");
  }

  std::vector<Graph> graphs;
  graphs.reserve(graph_count);
  for (std::size_t g = 0; g < graph_count; ++g) {
    EdgeNormalization norm;
    graphs.push_back(builders[g].build(&norm));
    local_report.duplicate_edge_lines_collapsed +=
        norm.parallel_edges_collapsed;
    local_report.self_loops_dropped += norm.self_loops_dropped;
  }

  if (report) *report = std::move(local_report);
  if (options.multiplicity_as_edge_label) {
    // Folded label ids encode (base label, multiplicity) pairs and do not
    // index the file's label dictionary.
    edge_label_dict = LabelDictionary{};
  }
  return Dataset(name, std::move(graphs), std::move(class_values),
                 std::move(node_label_dict), std::move(edge_label_dict));
}

void write_dataset(const Dataset& ds, const fs::path& dir) {
  fs::create_directories(dir);
  const std::string name = ds.name();
  auto open = [&](const std::string& suffix) {
    fs::path p = dir / (name + suffix);
    std::ofstream out(p, std::ios::trunc);
    if (!out) throw ParseError("cannot write " + p.string());
    return out;
  };

  // 1-based global node id of the first node of each graph.
  std::vector<std::size_t> offset(ds.size() + 1, 0);
  for (std::size_t g = 0; g < ds.size(); ++g) {
    offset[g + 1] = offset[g] + ds.graph(g).node_count();
  }

  {
    std::ofstream a = open("_A.txt");
    std::ofstream lab;
    std::ofstream attr;
    if (ds.has_edge_labels()) lab = open("_edge_labels.txt");
    if (ds.has_edge_attributes()) attr = open("_edge_attributes.txt");
    for (std::size_t g = 0; g < ds.size(); ++g) {
      const Graph& graph = ds.graph(g);
      for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        auto [u, v] = graph.edges()[e];
        std::size_t gu = offset[g] + u + 1, gv = offset[g] + v + 1;
        a << gu << ", " << gv << "\n" << gv << ", " << gu << "\n";
        if (ds.has_edge_labels()) {
          std::int64_t value =
              ds.edge_label_dictionary().size() > 0
                  ? ds.edge_label_dictionary().value(graph.edge_label(e))
                  : graph.edge_label(e);
          lab << value << "\n" << value << "\n";
        }
        if (ds.has_edge_attributes()) {
          std::string row;
          for (std::size_t i = 0; i < graph.edge_attributes()[e].size(); ++i) {
            if (i) row += ", ";
            row += shortest_double(graph.edge_attributes()[e][i]);
          }
          attr << row << "\n" << row << "\n";
        }
      }
    }
  }
  {
    std::ofstream ind = open("_graph_indicator.txt");
    for (std::size_t g = 0; g < ds.size(); ++g) {
      for (std::uint32_t v = 0; v < ds.graph(g).node_count(); ++v) {
        ind << g + 1 << "\n";
      }
    }
  }
  {
    std::ofstream lab = open("_graph_labels.txt");
    for (std::size_t g = 0; g < ds.size(); ++g) {
      lab << ds.class_value(g) << "\n";
    }
  }
  if (ds.has_node_labels()) {
    std::ofstream lab = open("_node_labels.txt");
    for (std::size_t g = 0; g < ds.size(); ++g) {
      const Graph& graph = ds.graph(g);
      for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
        std::int64_t value =
            ds.node_label_dictionary().size() > 0
                ? ds.node_label_dictionary().value(graph.node_label(v))
                : graph.node_label(v);
        lab << value << "\n";
      }
    }
  }
  if (ds.has_node_attributes()) {
    std::ofstream attr = open("_node_attributes.txt");
    for (std::size_t g = 0; g < ds.size(); ++g) {
      const Graph& graph = ds.graph(g);
      for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
        const std::vector<double>& row = graph.node_attributes()[v];
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) attr << ", ";
          attr << shortest_double(row[i]);
        }
        attr << "\n";
      }
    }
  }
}

DatasetStats dataset_stats(const Dataset& ds) {
  DatasetStats stats;
  stats.n = ds.size();
  stats.classes = ds.class_count();
  stats.has_node_labels = ds.has_node_labels();
  stats.has_edge_labels = ds.has_edge_labels();
  for (const Graph& g : ds.graphs()) {
    stats.total_nodes += g.node_count();
    stats.total_edges += g.edge_count();
  }
  if (ds.size() > 0) {
    std::vector<std::size_t> per_class(ds.class_count(), 0);
    for (std::int32_t c : ds.class_labels()) ++per_class[c];
    stats.min_class_size = *std::min_element(per_class.begin(), per_class.end());
    stats.max_class_size = *std::max_element(per_class.begin(), per_class.end());
  }
  return stats;
}

Graph load_graph_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file.string());
  std::optional<std::uint32_t> node_count;
  std::vector<std::int32_t> node_labels;
  bool have_node_labels = false;
  struct RawEdge {
    VertexId u, v;
    std::optional<std::int32_t> label;
  };
  std::vector<RawEdge> edges;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok[0] == '#') continue;
    if (tok == "nodes") {
      std::int64_t n;
      if (!(ss >> n) || n < 0) {
        throw ParseError("bad node count at " + location(file, line_no));
      }
      node_count = static_cast<std::uint32_t>(n);
    } else if (tok == "node_labels") {
      std::int64_t l;
      while (ss >> l) node_labels.push_back(static_cast<std::int32_t>(l));
      have_node_labels = true;
    } else if (tok == "edge") {
      std::int64_t u, v;
      if (!(ss >> u >> v) || u < 0 || v < 0) {
        throw ParseError("bad edge at " + location(file, line_no));
      }
      RawEdge e{static_cast<VertexId>(u), static_cast<VertexId>(v),
                std::nullopt};
      std::int64_t l;
      if (ss >> l) e.label = static_cast<std::int32_t>(l);
      edges.push_back(e);
    } else {
      throw ParseError("unknown directive '" + tok + "' at " +
                       location(file, line_no));
    }
  }
  if (!node_count) {
    throw ParseError(file.string() + ": missing 'nodes' line");
  }
  GraphBuilder b(*node_count);
  if (have_node_labels) b.node_labels(std::move(node_labels));
  for (const RawEdge& e : edges) b.add_edge(e.u, e.v, e.label, std::nullopt);
  return b.build();
}

}  // namespace iso
