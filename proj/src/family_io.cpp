#include "extri/family_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace extri {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, int line_no)
{
    token = trim(token);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw DomainError("line " + std::to_string(line_no) + ": not an integer: '" + std::string(token) + "'");
    return value;
}

Family parse_text(std::string_view text)
{
    std::optional<int> n;
    std::vector<Block> blocks;
    int line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        if (!n) {
            if (!line.starts_with("n="))
                throw DomainError("line " + std::to_string(line_no) + ": expected 'n=<n>'");
            n = parse_int(line.substr(2), line_no);
            GroundSet check(*n);
            continue;
        }
        Block b;
        int previous = 0;
        while (!line.empty()) {
            const auto comma = line.find(',');
            const int e = parse_int(line.substr(0, comma), line_no);
            if (e <= previous || e > *n)
                throw DomainError("line " + std::to_string(line_no) + ": elements must be ascending within 1.." +
                                  std::to_string(*n));
            b.set(e);
            previous = e;
            line = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
        }
        blocks.push_back(b);
    }
    if (!n)
        throw DomainError("family text has no 'n=' header");
    return Family(*n, std::move(blocks));
}

} // namespace

Family parse_family(std::string_view text)
{
    const auto body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(std::string("invalid family JSON: ") + e.what());
        }
        return family_from_json(j);
    }
    return parse_text(text);
}

Family read_family_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open family file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_family(buffer.str());
}

void write_family_text(std::ostream& out, const Family& family)
{
    out << "n=" << family.n() << '\n';
    for (const auto& b : family) {
        bool first = true;
        for (int e : b.elements()) {
            if (!first)
                out << ',';
            out << e;
            first = false;
        }
        out << '\n';
    }
}

std::string family_to_text(const Family& family)
{
    std::ostringstream out;
    write_family_text(out, family);
    return out.str();
}

nlohmann::ordered_json family_to_json(const Family& family)
{
    nlohmann::ordered_json j;
    j["n"] = family.n();
    auto blocks = nlohmann::ordered_json::array();
    for (const auto& b : family)
        blocks.push_back(b.elements());
    j["blocks"] = std::move(blocks);
    return j;
}

Family family_from_json(const nlohmann::json& j)
{
    try {
        const int n = j.at("n").get<int>();
        GroundSet ground(n);
        std::vector<Block> blocks;
        for (const auto& arr : j.at("blocks")) {
            Block b;
            for (const auto& e : arr) {
                const int v = e.get<int>();
                if (!ground.contains(v))
                    throw DomainError("element " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
                b.set(v);
            }
            blocks.push_back(b);
        }
        return Family(ground, std::move(blocks));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed family JSON: ") + e.what());
    }
}

} // namespace extri
