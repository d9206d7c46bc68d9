#include "buckyforge/io.hpp"
