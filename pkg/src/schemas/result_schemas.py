"""
Marshmallow schemas for results printed or written by the command line.
"""
from marshmallow import Schema, fields


class EtherTileSchema(Schema):
    """Schema for an ether tile"""
    rule_number = fields.Integer()
    spatial_period = fields.Integer()
    temporal_period = fields.Integer()
    rows = fields.List(fields.String())
    shift_per_period = fields.Integer()


class DropEventSchema(Schema):
    """Schema for one drop event (a drops.csv row)"""
    start_step = fields.Integer()
    end_step = fields.Integer()
    magnitude = fields.Float()


class CtsTraceSchema(Schema):
    """Schema for a cyclic tag system trace"""
    words = fields.List(fields.String())
    lengths = fields.List(fields.Integer())
    halted = fields.Boolean()
    halted_at = fields.Integer(allow_none=True)
    words_truncated = fields.Boolean()
    steps_taken = fields.Integer()
