#include "premon/stext.hpp"

#include <cctype>
#include <sstream>

namespace premon {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string drop_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

std::vector<std::string> split_top(const std::string& body, char sep, int line) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    bool quoted = false;
    for (char ch : body) {
        if (ch == '"') quoted = !quoted;
        if (!quoted) {
            if (ch == '[' || ch == '{' || ch == '(') ++depth;
            if (ch == ']' || ch == '}' || ch == ')') --depth;
            if (depth < 0) throw ParseError(line, 0, "unbalanced brackets");
            if (ch == sep && depth == 0) {
                parts.push_back(strip(cur));
                cur.clear();
                continue;
            }
        }
        cur.push_back(ch);
    }
    if (!strip(cur).empty() || !parts.empty()) parts.push_back(strip(cur));
    return parts;
}

STextValue parse_value(const std::string& raw, int line) {
    STextValue v;
    std::string s = strip(raw);
    if (s.empty()) throw ParseError(line, 0, "missing value");
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError(line, 0, "unterminated list");
        v.kind = STextValue::Kind::List;
        std::string body = strip(s.substr(1, s.size() - 2));
        if (!body.empty())
            for (auto& item : split_top(body, ',', line)) {
                if (item.empty()) throw ParseError(line, 0, "empty list item");
                v.list.push_back(item);
            }
        return v;
    }
    if (s.front() == '{') {
        if (s.back() != '}') throw ParseError(line, 0, "unterminated map");
        v.kind = STextValue::Kind::Map;
        std::string body = strip(s.substr(1, s.size() - 2));
        if (!body.empty())
            for (auto& item : split_top(body, ',', line)) {
                auto pos = item.find(':');
                if (pos == std::string::npos)
                    throw ParseError(line, 0, "map entry needs 'key: value'");
                std::string k = strip(item.substr(0, pos));
                std::string val = strip(item.substr(pos + 1));
                if (k.empty() || val.empty())
                    throw ParseError(line, 0, "empty map key or value");
                v.map.emplace_back(k, val);
            }
        return v;
    }
    v.kind = STextValue::Kind::Scalar;
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        s = s.substr(1, s.size() - 2);
    v.scalar = s;
    return v;
}

std::string parse_key(const std::string& raw, int line) {
    // unquote embedded "..." segments
    std::string out;
    bool quoted = false;
    for (char ch : raw) {
        if (ch == '"') {
            quoted = !quoted;
            continue;
        }
        if (!quoted && std::isspace(static_cast<unsigned char>(ch)))
            throw ParseError(line, 0, "whitespace inside key");
        out.push_back(ch);
    }
    if (quoted) throw ParseError(line, 0, "unterminated quote in key");
    if (out.empty()) throw ParseError(line, 0, "empty key");
    return out;
}

} // namespace

std::vector<STextSection> parse_stext(const std::string& text) {
    std::vector<STextSection> sections;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(drop_comment(line));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ParseError(lineno, 1, "unterminated section header");
            STextSection sec;
            sec.name = strip(s.substr(1, s.size() - 2));
            sec.line = lineno;
            if (sec.name.empty()) throw ParseError(lineno, 1, "empty section name");
            sections.push_back(std::move(sec));
            continue;
        }
        auto pos = s.find('=');
        if (pos == std::string::npos)
            throw ParseError(lineno, 1, "expected 'key = value' or '[section]'");
        if (sections.empty())
            throw ParseError(lineno, 1, "entry before any [section] header");
        STextEntry e;
        e.key = parse_key(strip(s.substr(0, pos)), lineno);
        e.value = parse_value(s.substr(pos + 1), lineno);
        e.line = lineno;
        sections.back().entries.push_back(std::move(e));
    }
    return sections;
}

} // namespace premon
