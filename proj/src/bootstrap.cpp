#include "buckyforge/seeds.hpp"
