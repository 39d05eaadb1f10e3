#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace minkgeo {

/// 17 significant digits: doubles round-trip bit-exactly through the decimal
/// form. Integral values keep a trailing ".0" so the JSON type stays float.
inline std::string format_double_17(double x) {
    if (std::isnan(x) || std::isinf(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    std::string s = buf;
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

/// Minimal ordered JSON writer. Numbers are printed with 17 significant
/// digits so serialized doubles round-trip bit-exactly and output is
/// byte-stable for a fixed seed.
class JsonWriter {
public:
    JsonWriter& begin_object() { return token("{"); }
    JsonWriter& end_object() { return close("}"); }
    JsonWriter& begin_array() { return token("["); }
    JsonWriter& end_array() { return close("]"); }

    JsonWriter& key(const std::string& k) {
        sep();
        out_ += '"';
        out_ += k;
        out_ += "\":";
        fresh_ = true;
        return *this;
    }
    JsonWriter& value(double x) {
        sep();
        out_ += format_double_17(x);
        return *this;
    }
    JsonWriter& value(long long x) {
        sep();
        out_ += std::to_string(x);
        return *this;
    }
    JsonWriter& value(unsigned long long x) {
        sep();
        out_ += std::to_string(x);
        return *this;
    }
    JsonWriter& value(int x) { return value(static_cast<long long>(x)); }
    JsonWriter& value(size_t x) { return value(static_cast<unsigned long long>(x)); }
    JsonWriter& value(bool b) {
        sep();
        out_ += b ? "true" : "false";
        return *this;
    }
    JsonWriter& value(const std::string& s) {
        sep();
        out_ += '"';
        for (char c : s) {
            if (c == '"' || c == '\\') out_ += '\\';
            out_ += c;
        }
        out_ += '"';
        return *this;
    }
    JsonWriter& value(const char* s) { return value(std::string(s)); }

    template <typename T>
    JsonWriter& field(const std::string& k, const T& v) {
        key(k);
        return value(v);
    }
    JsonWriter& field(const std::string& k, const std::vector<double>& v) {
        key(k);
        begin_array();
        for (double x : v) value(x);
        return end_array();
    }

    const std::string& str() const { return out_; }

private:
    JsonWriter& token(const char* t) {
        sep();
        out_ += t;
        fresh_ = true;
        return *this;
    }
    JsonWriter& close(const char* t) {
        out_ += t;
        fresh_ = false;
        return *this;
    }
    void sep() {
        if (!fresh_ && !out_.empty()) {
            char last = out_.back();
            if (last != '{' && last != '[' && last != ':') out_ += ',';
        }
        fresh_ = false;
    }

    std::string out_;
    bool fresh_ = true;
};

}  // namespace minkgeo
