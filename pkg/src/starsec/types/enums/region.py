from enum import Enum


class Region(Enum):
    REFLECT = "reflect"
    TRANSMIT = "transmit"
