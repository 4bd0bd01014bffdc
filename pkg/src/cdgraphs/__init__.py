"""Prime character degree graphs on seven vertices: enumeration and occurrence."""

__version__ = "0.1.0"
