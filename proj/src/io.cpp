#include "coarseness/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace coarseness {

namespace {

using nlohmann::json;

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

ColoredPointSet read_instance(std::istream& in) {
    std::vector<Point> points;
    std::vector<Color> colors;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        Coord x, y;
        std::string c;
        if (!(ss >> x >> y >> c)) throw ParseError(lineno, "expected `x y C`");
        std::string rest;
        if (ss >> rest) throw ParseError(lineno, "trailing content `" + rest + "`");
        if (c != "R" && c != "B") throw ParseError(lineno, "color must be R or B");
        points.push_back(Point{x, y});
        colors.push_back(c == "R" ? Color::Red : Color::Blue);
    }
    return ColoredPointSet::create(std::move(points), std::move(colors));
}

ColoredPointSet read_instance_file(const std::string& path) {
    if (path == "-") return read_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_instance(in);
}

void write_instance(std::ostream& out, const ColoredPointSet& ps) {
    for (int i = 0; i < ps.size(); ++i) {
        out << ps.points[i].x << ' ' << ps.points[i].y << ' '
            << (ps.colors[i] == Color::Red ? 'R' : 'B') << '\n';
    }
}

std::vector<std::vector<int>> read_blocks(std::istream& in) {
    std::vector<std::vector<int>> blocks;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        std::vector<int> block;
        int idx;
        while (ss >> idx) block.push_back(idx);
        if (!ss.eof()) throw ParseError(lineno, "expected space-separated indices");
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return blocks;
}

std::vector<std::vector<int>> read_blocks_file(const std::string& path) {
    if (path == "-") return read_blocks(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_blocks(in);
}

std::string to_json(const ReportRecord& rec) {
    json j;
    j["command"] = rec.command;
    j["n"] = rec.n;
    j["r"] = rec.r;
    j["b"] = rec.b;
    auto put = [&](const char* key, const auto& opt) {
        if (opt) j[key] = *opt;
    };
    put("disc", rec.disc);
    put("d1", rec.d1);
    put("d2", rec.d2);
    put("k", rec.k);
    put("dk", rec.dk);
    if (rec.lower) {
        j["lower"] = {{"num", rec.lower->num}, {"den", rec.lower->den}};
    }
    put("upper", rec.upper);
    put("value", rec.value);
    put("witness_disc", rec.witness_disc);
    put("partitions_examined", rec.partitions_examined);
    put("partition", rec.partition);
    put("witness_island", rec.witness_island);
    put("coloring", rec.coloring);
    put("certified_upper", rec.certified_upper);
    put("objective_value", rec.objective_value);
    put("m", rec.m);
    put("classes", rec.classes);
    put("shatter_bound", rec.shatter_bound);
    put("valid", rec.valid);
    put("violation", rec.violation);
    j["timing_ms"] = rec.timing_ms;
    return j.dump();
}

ReportRecord report_from_json(const std::string& text) {
    json j = json::parse(text);
    ReportRecord rec;
    rec.command = j.at("command").get<std::string>();
    rec.n = j.at("n").get<int>();
    rec.r = j.at("r").get<int>();
    rec.b = j.at("b").get<int>();
    auto get = [&](const char* key, auto& opt) {
        if (j.contains(key)) opt = j[key].get<typename std::decay_t<decltype(opt)>::value_type>();
    };
    get("disc", rec.disc);
    get("d1", rec.d1);
    get("d2", rec.d2);
    get("k", rec.k);
    get("dk", rec.dk);
    if (j.contains("lower")) {
        rec.lower = Rational(j["lower"]["num"].get<std::int64_t>(),
                             j["lower"]["den"].get<std::int64_t>());
    }
    get("upper", rec.upper);
    get("value", rec.value);
    get("witness_disc", rec.witness_disc);
    get("partitions_examined", rec.partitions_examined);
    get("partition", rec.partition);
    get("witness_island", rec.witness_island);
    get("coloring", rec.coloring);
    get("certified_upper", rec.certified_upper);
    get("objective_value", rec.objective_value);
    get("m", rec.m);
    get("classes", rec.classes);
    get("shatter_bound", rec.shatter_bound);
    get("valid", rec.valid);
    get("violation", rec.violation);
    rec.timing_ms = j.at("timing_ms").get<double>();
    return rec;
}

}  // namespace coarseness
