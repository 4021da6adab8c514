#pragma once

#include <string>

#include "sepinv/scene_io.hpp"

inline sepinv::Json scene_json(const std::string& name) {
    return sepinv::read_json_file(std::string(SEPINV_SCENES_DIR) + "/" + name);
}

inline sepinv::Scene<sepinv::FiniteField> finite_scene(const std::string& name) {
    const auto j = scene_json(name);
    return sepinv::scene_from_json(j, sepinv::FiniteField(sepinv::scene_field_spec(j)));
}

inline sepinv::Scene<sepinv::RationalField> rational_scene(const std::string& name) {
    return sepinv::scene_from_json(scene_json(name), sepinv::RationalField{});
}
