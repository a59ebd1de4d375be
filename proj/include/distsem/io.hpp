#pragma once

#include <zlib.h>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "distsem/error.hpp"

namespace distsem {

// Reads a text file line by line. Gzip-compressed input is decompressed
// transparently (zlib sniffs the stream, the file name does not matter).
class LineReader {
public:
    explicit LineReader(const std::string& path)
        : path_(path), file_(gzopen(path.c_str(), "rb")) {
        if (!file_) throw Error("cannot open " + path);
    }
    ~LineReader() {
        if (file_) gzclose(file_);
    }
    LineReader(const LineReader&) = delete;
    LineReader& operator=(const LineReader&) = delete;

    // Fills `line` (without the trailing newline); returns false at EOF.
    bool next(std::string& line) {
        line.clear();
        bool saw_any = false;
        for (;;) {
            if (pos_ == len_) {
                if (eof_) break;
                int n = gzread(file_, buf_.data(), static_cast<unsigned>(buf_.size()));
                if (n < 0) {
                    int errnum = 0;
                    const char* msg = gzerror(file_, &errnum);
                    throw Error("read error in " + path_ + ": " + (msg ? msg : "unknown"));
                }
                if (n == 0) {
                    eof_ = true;
                    break;
                }
                pos_ = 0;
                len_ = static_cast<std::size_t>(n);
            }
            saw_any = true;
            const char* start = buf_.data() + pos_;
            const char* nl = static_cast<const char*>(memchr(start, '\n', len_ - pos_));
            if (nl) {
                line.append(start, nl);
                pos_ = static_cast<std::size_t>(nl - buf_.data()) + 1;
                break;
            }
            line.append(start, buf_.data() + len_);
            pos_ = len_;
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return saw_any;
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
    gzFile file_ = nullptr;
    std::vector<char> buf_ = std::vector<char>(1 << 16);
    std::size_t pos_ = 0, len_ = 0;
    bool eof_ = false;
};

// Writes text to a file; paths ending in ".gz" are gzip-compressed.
class LineWriter {
public:
    explicit LineWriter(const std::string& path) : path_(path) {
        if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
            gz_ = gzopen(path.c_str(), "wb");
            if (!gz_) throw Error("cannot open " + path + " for writing");
        } else {
            plain_ = std::fopen(path.c_str(), "wb");
            if (!plain_) throw Error("cannot open " + path + " for writing");
        }
    }
    ~LineWriter() { close_quiet(); }
    LineWriter(const LineWriter&) = delete;
    LineWriter& operator=(const LineWriter&) = delete;

    void write(std::string_view s) {
        if (gz_) {
            if (s.empty()) return;
            if (gzwrite(gz_, s.data(), static_cast<unsigned>(s.size())) <= 0)
                throw Error("write error in " + path_);
        } else if (plain_) {
            if (!s.empty() && std::fwrite(s.data(), 1, s.size(), plain_) != s.size())
                throw Error("write error in " + path_);
        } else {
            throw Error("writer already closed: " + path_);
        }
    }

    void write_line(std::string_view s) {
        write(s);
        write("\n");
    }

    void close() {
        if (gz_) {
            int rc = gzclose(gz_);
            gz_ = nullptr;
            if (rc != Z_OK) throw Error("close error in " + path_);
        } else if (plain_) {
            int rc = std::fclose(plain_);
            plain_ = nullptr;
            if (rc != 0) throw Error("close error in " + path_);
        }
    }

private:
    void close_quiet() {
        if (gz_) gzclose(gz_);
        if (plain_) std::fclose(plain_);
        gz_ = nullptr;
        plain_ = nullptr;
    }

    std::string path_;
    gzFile gz_ = nullptr;
    std::FILE* plain_ = nullptr;
};

// Shortest decimal form that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw Error("bad number: '" + std::string(s) + "'");
    return v;
}

inline std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw Error("bad integer: '" + std::string(s) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char delim) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == delim) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

} // namespace distsem
