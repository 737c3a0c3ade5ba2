#include "ducci/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "ducci/errors.hpp"

namespace ducci {

std::string json_array(const GameTuple& t) { return "[" + t.to_string(",") + "]"; }

namespace {

bool all_digits(const std::string& s) {
    auto body = std::string_view(s);
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    return !body.empty() &&
           std::all_of(body.begin(), body.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Mirrors nlohmann's DOM builder, except for out-of-range integer literals.
class ExactSax : public nlohmann::json::json_sax_t {
public:
    using json = nlohmann::json;

    json root;

    bool null() override { return put(json(nullptr)); }
    bool boolean(bool v) override { return put(json(v)); }
    bool number_integer(number_integer_t v) override { return put(json(v)); }
    bool number_unsigned(number_unsigned_t v) override { return put(json(v)); }
    bool number_float(number_float_t v, const string_t& s) override {
        return all_digits(s) ? put(json(s)) : put(json(v));
    }
    bool string(string_t& v) override { return put(json(v)); }
    bool binary(binary_t& v) override { return put(json::binary(v)); }

    bool start_object(std::size_t) override { return open(json::object()); }
    bool key(string_t& k) override {
        key_ = k;
        return true;
    }
    bool end_object() override { return close(); }
    bool start_array(std::size_t) override { return open(json::array()); }
    bool end_array() override { return close(); }

    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
        throw ValidationError(std::string("malformed JSON: ") + ex.what());
    }

private:
    std::vector<json*> stack_;
    std::string key_;

    json* place(json v) {
        if (stack_.empty()) {
            root = std::move(v);
            return &root;
        }
        json& parent = *stack_.back();
        if (parent.is_array()) {
            parent.push_back(std::move(v));
            return &parent.back();
        }
        parent[key_] = std::move(v);
        return &parent[key_];
    }
    bool put(json v) {
        place(std::move(v));
        return true;
    }
    bool open(json v) {
        stack_.push_back(place(std::move(v)));
        return true;
    }
    bool close() {
        stack_.pop_back();
        return true;
    }
};

}  // namespace

nlohmann::json parse_json_exact(std::string_view text) {
    ExactSax sax;
    nlohmann::json::sax_parse(text.begin(), text.end(), &sax);
    return std::move(sax.root);
}

Integer json_integer(const nlohmann::json& v) {
    if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
    if (v.is_number_integer()) {
        const auto x = v.get<std::int64_t>();
        if (x < 0) throw ValidationError("negative integer in JSON");
        return Integer(x);
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (!all_digits(s) || s.front() == '-') throw ValidationError("not a natural: " + s);
        return Integer(s);
    }
    throw ValidationError("expected an integer, got " + std::string(v.type_name()));
}

GameTuple json_tuple(const nlohmann::json& v) {
    if (!v.is_array()) throw ValidationError("expected a JSON array for a tuple");
    std::vector<Integer> entries;
    entries.reserve(v.size());
    for (const auto& e : v) entries.push_back(json_integer(e));
    return GameTuple(std::move(entries));
}

}  // namespace ducci
