"""
Marshmallow schemas for experiment specs and the command-line requests that build them.
"""
from pathlib import Path
from marshmallow import Schema, ValidationError, fields, post_load, validate, validates, validates_schema
from config import get_config
from models.analysis_kind import AnalysisKind, InitialKind
from models.experiment_spec import AnalysisSpec, ExperimentSpec, InitialSource
from models.region import Region

_config = get_config()

RULE_RANGE = validate.Range(min=0, max=255)
DENSITY_RANGE = validate.Range(min=0.0, max=1.0)
SEED_RANGE = validate.Range(min=0, max=2 ** 64 - 1)
POSITIVE = validate.Range(min=1)
NON_NEGATIVE = validate.Range(min=0)
IMAGE_SUFFIXES = ('.png', '.pbm')


def _parse_regions(values, field_name):
    regions = []
    for value in values or []:
        try:
            regions.append(Region.parse(value))
        except ValueError as e:
            raise ValidationError(str(e), field_name)
    return regions


class RegionSchema(Schema):
    """Schema for a START:LEN region"""
    start_x = fields.Integer(required=True, validate=NON_NEGATIVE)
    length = fields.Integer(required=True, validate=NON_NEGATIVE)

    @post_load
    def make_region(self, data, **kwargs):
        return Region(**data)


class InitialSourceSchema(Schema):
    """Schema for the initial configuration source"""
    kind = fields.Enum(InitialKind, by_value=True, required=True)
    density = fields.Float(allow_none=True, validate=DENSITY_RANGE)
    seed = fields.Integer(allow_none=True, validate=SEED_RANGE)
    path = fields.String(allow_none=True)

    @validates_schema
    def validate_source(self, data, **kwargs):
        if data['kind'] == InitialKind.FILE:
            if not data.get('path'):
                raise ValidationError("A file start needs a path", 'path')
            if data.get('density') is not None or data.get('seed') is not None:
                raise ValidationError("Exactly one initial source: a file start takes no density or seed")
        elif data.get('path'):
            raise ValidationError("Exactly one initial source: a random start takes no path")

    @post_load
    def make_source(self, data, **kwargs):
        return InitialSource(**data)


class AnalysisSchema(Schema):
    """Schema for one complexity analysis"""
    kind = fields.Enum(AnalysisKind, by_value=True, required=True)
    n_sections = fields.Integer(allow_none=True, validate=POSITIVE)
    regions = fields.List(fields.Nested(RegionSchema), load_default=list)
    from_step = fields.Integer(allow_none=True, validate=NON_NEGATIVE)
    to_step = fields.Integer(allow_none=True, validate=NON_NEGATIVE)

    @validates_schema
    def validate_analysis(self, data, **kwargs):
        if data['kind'] == AnalysisKind.SECTIONS and not data.get('n_sections'):
            raise ValidationError("A sections analysis needs n_sections", 'n_sections')
        if data['kind'] == AnalysisKind.REGIONS and not data.get('regions'):
            raise ValidationError("A regions analysis needs at least one region", 'regions')
        start, end = data.get('from_step'), data.get('to_step')
        if start is not None and end is not None and start > end:
            raise ValidationError("from_step must not exceed to_step", 'from_step')

    @post_load
    def make_analysis(self, data, **kwargs):
        return AnalysisSpec(**data)


class ExperimentSpecSchema(Schema):
    """Schema for a complete experiment spec (the to_dict() form of ExperimentSpec)"""
    rule_number = fields.Integer(required=True, validate=RULE_RANGE)
    initial = fields.Nested(InitialSourceSchema, required=True)
    steps = fields.Integer(required=True, validate=NON_NEGATIVE)
    stride = fields.Integer(load_default=1, validate=POSITIVE)
    analyses = fields.List(fields.Nested(AnalysisSchema), load_default=list)
    width = fields.Integer(allow_none=True, validate=validate.Range(min=3))
    smoothing_period = fields.Integer(allow_none=True, validate=POSITIVE)
    min_drop = fields.Float(load_default=_config.MIN_DROP, validate=validate.Range(min=0.0, max=1.0, min_inclusive=False, max_inclusive=False))
    output_dir = fields.String(load_default=_config.OUTPUT_DIR)
    timestamp = fields.Boolean(load_default=True)
    plot = fields.Boolean(load_default=True)
    gnuplot = fields.Boolean(load_default=False)
    images = fields.Boolean(load_default=False)
    workers = fields.Integer(load_default=1, validate=POSITIVE)

    @validates_schema
    def validate_spec(self, data, **kwargs):
        for analysis in data.get('analyses', []):
            if analysis.to_step is not None and analysis.to_step > data['steps']:
                raise ValidationError(
                    f"Analysis '{analysis.name}' ends at step {analysis.to_step}, after the last step {data['steps']}",
                    'analyses'
                )
            width = data.get('width')
            if width is None:
                continue
            for region in analysis.regions:
                if not region.fits(width):
                    raise ValidationError(f"Region {region} does not fit width {width}", 'analyses')
            if analysis.n_sections is not None and analysis.n_sections > width:
                raise ValidationError(f"Cannot split width {width} into {analysis.n_sections} sections", 'analyses')

    @post_load
    def make_spec(self, data, **kwargs):
        return ExperimentSpec(**data)


class EvolveRequestSchema(Schema):
    """Schema for the evolve command"""
    rule = fields.Integer(load_default=_config.DEFAULT_RULE, validate=RULE_RANGE)
    width = fields.Integer(allow_none=True, load_default=None, validate=validate.Range(min=3))
    density = fields.Float(allow_none=True, load_default=None, validate=DENSITY_RANGE)
    seed = fields.Integer(allow_none=True, load_default=None, validate=SEED_RANGE)
    config = fields.String(allow_none=True, load_default=None)
    steps = fields.Integer(load_default=_config.DEFAULT_STEPS, validate=NON_NEGATIVE)
    stride = fields.Integer(load_default=_config.DEFAULT_STRIDE, validate=POSITIVE)
    out = fields.String(allow_none=True, load_default=None)
    spacetime = fields.String(allow_none=True, load_default=None)
    image = fields.String(allow_none=True, load_default=None)
    image_region = fields.String(allow_none=True, load_default=None)
    from_step = fields.Integer(allow_none=True, load_default=None, validate=NON_NEGATIVE)
    to_step = fields.Integer(allow_none=True, load_default=None, validate=NON_NEGATIVE)

    @validates('image')
    def validate_image(self, value, **kwargs):
        if value is not None and Path(value).suffix.lower() not in IMAGE_SUFFIXES:
            raise ValidationError(f"Space-time images must end in .png or .pbm, got {value}")

    @validates('image_region')
    def validate_image_region(self, value, **kwargs):
        if value is not None:
            _parse_regions([value], 'image_region')

    @validates_schema
    def validate_source(self, data, **kwargs):
        if data.get('config') and any(data.get(name) is not None for name in ('width', 'density', 'seed')):
            raise ValidationError("Exactly one initial source: --config excludes --width, --density and --seed")
        start, end = data.get('from_step'), data.get('to_step')
        if start is not None and end is not None and start > end:
            raise ValidationError("--from must not exceed --to", 'from_step')
        if end is not None and end > data['steps']:
            raise ValidationError("--to must not exceed --steps", 'to_step')


class AnalyzeRequestSchema(EvolveRequestSchema):
    """Schema for the analyze command; loads into an ExperimentSpec"""
    sections = fields.Integer(allow_none=True, load_default=None, validate=POSITIVE)
    region = fields.List(fields.String(), load_default=list)
    period = fields.Integer(allow_none=True, load_default=None, validate=POSITIVE)
    min_drop = fields.Float(load_default=_config.MIN_DROP, validate=validate.Range(min=0.0, max=1.0, min_inclusive=False, max_inclusive=False))
    out = fields.String(load_default=_config.OUTPUT_DIR)
    no_timestamp = fields.Boolean(load_default=False)
    no_plot = fields.Boolean(load_default=False)
    gnuplot = fields.Boolean(load_default=False)
    images = fields.Boolean(load_default=False)
    workers = fields.Integer(load_default=_config.WORKERS, validate=POSITIVE)

    @validates('region')
    def validate_region(self, value, **kwargs):
        _parse_regions(value, 'region')

    @post_load
    def make_spec(self, data, **kwargs):
        if data.get('config'):
            initial = InitialSource(kind=InitialKind.FILE, path=data['config'])
            width = None
        else:
            initial = InitialSource(
                kind=InitialKind.RANDOM,
                density=_config.DEFAULT_DENSITY if data['density'] is None else data['density'],
                seed=_config.DEFAULT_SEED if data['seed'] is None else data['seed']
            )
            width = _config.DEFAULT_WIDTH if data['width'] is None else data['width']

        window = {'from_step': data['from_step'], 'to_step': data['to_step']}
        analyses = [AnalysisSpec(kind=AnalysisKind.WHOLE, **window)]
        if data['sections']:
            analyses.append(AnalysisSpec(kind=AnalysisKind.SECTIONS, n_sections=data['sections'], **window))
        regions = _parse_regions(data['region'], 'region')
        if regions:
            analyses.append(AnalysisSpec(kind=AnalysisKind.REGIONS, regions=regions, **window))

        spec = ExperimentSpec(
            rule_number=data['rule'],
            initial=initial,
            steps=data['steps'],
            stride=data['stride'],
            analyses=analyses,
            width=width,
            smoothing_period=data['period'],
            min_drop=data['min_drop'],
            output_dir=data['out'],
            timestamp=not data['no_timestamp'],
            plot=not data['no_plot'],
            gnuplot=data['gnuplot'],
            images=data['images'],
            workers=data['workers']
        )
        # Cross-field checks (step window, region bounds) live on the spec schema
        return ExperimentSpecSchema().load(spec.to_dict())


class ReproduceRequestSchema(Schema):
    """Schema for the reproduce-paper command"""
    config = fields.String(required=True)
    out = fields.String(load_default=_config.OUTPUT_DIR)
    rule = fields.Integer(load_default=_config.DEFAULT_RULE, validate=RULE_RANGE)
    steps = fields.Integer(load_default=_config.REPRODUCE_STEPS, validate=NON_NEGATIVE)
    stride = fields.Integer(load_default=_config.DEFAULT_STRIDE, validate=POSITIVE)
    period = fields.Integer(load_default=_config.SMOOTHING_PERIOD, validate=POSITIVE)
    sections = fields.Integer(load_default=_config.REPRODUCE_SECTIONS, validate=POSITIVE)
    region = fields.List(fields.String(), load_default=lambda: _config.DETAIL_REGIONS.split(','))
    # Unset ends default to DETAIL_FROM/DETAIL_TO; a run shorter than that window gets all its steps
    from_step = fields.Integer(load_default=None, allow_none=True, validate=NON_NEGATIVE)
    to_step = fields.Integer(load_default=None, allow_none=True, validate=NON_NEGATIVE)
    seed = fields.Integer(load_default=_config.DEFAULT_SEED, validate=SEED_RANGE)
    density = fields.Float(load_default=_config.DEFAULT_DENSITY, validate=DENSITY_RANGE)
    min_drop = fields.Float(load_default=_config.MIN_DROP, validate=validate.Range(min=0.0, max=1.0, min_inclusive=False, max_inclusive=False))
    skip_random = fields.Boolean(load_default=False)
    no_timestamp = fields.Boolean(load_default=False)
    gnuplot = fields.Boolean(load_default=False)
    images = fields.Boolean(load_default=False)
    workers = fields.Integer(load_default=_config.WORKERS, validate=POSITIVE)

    @validates('region')
    def validate_region(self, value, **kwargs):
        _parse_regions(value, 'region')

    @staticmethod
    def _detail_window(data):
        to_step = data['to_step']
        if to_step is None:
            to_step = min(_config.DETAIL_TO, data['steps'])
        from_step = data['from_step']
        if from_step is None:
            from_step = _config.DETAIL_FROM if _config.DETAIL_FROM <= to_step else 0
        return from_step, to_step

    @validates_schema
    def validate_window(self, data, **kwargs):
        from_step, to_step = self._detail_window(data)
        if from_step > to_step:
            raise ValidationError("--from must not exceed --to", 'from_step')
        if to_step > data['steps']:
            raise ValidationError("--to must not exceed --steps", 'to_step')

    @post_load
    def resolve_window(self, data, **kwargs):
        data['from_step'], data['to_step'] = self._detail_window(data)
        data['region'] = _parse_regions(data['region'], 'region')
        return data
