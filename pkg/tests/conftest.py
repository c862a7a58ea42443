"""Shared pytest path anchoring; test modules import golden data from
each other (e.g. the chain sets) so the tests directory must be on the
import path."""
