import pytest

from satqkd import ConfigError, DomainError, Protocol, parse_scenario
from satqkd.config import DEFAULT_SITES, ScenarioConfig, Site, with_overrides


def write(tmp_path, text):
    path = tmp_path / "scenario.toml"
    path.write_text(text)
    return path


def test_empty_file_gives_defaults(tmp_path):
    config = parse_scenario(write(tmp_path, ""))
    assert config == ScenarioConfig()
    assert config.sites == DEFAULT_SITES
    assert config.theta_min_deg == 10.0
    assert config.overpass_hours == (0, 12)
    assert config.site_ids == ("Dublin", "Galway", "Cork", "Waterford")


def test_sections_override(tmp_path):
    config = parse_scenario(
        write(
            tmp_path,
            """
            theta_min_deg = 15
            output_format = "json"
            output_dir = "out"

            [orbit]
            altitude_m = 600e3

            [link]
            zenith_transmittance = 0.7
            other_loss_db = 25

            [source]
            pulse_rate_hz = 2e9
            protocol = "bb84_wcp_decoy"
            """,
        )
    )
    assert config.orbit.altitude_m == 600e3
    assert config.link.zenith_transmittance == 0.7
    assert config.link.other_loss_db == 25.0
    assert config.source.pulse_rate_hz == 2e9
    assert config.source.protocol is Protocol.BB84_WCP_DECOY
    assert config.theta_min_deg == 15.0
    assert config.output_format == "json"


def test_sites_replacement(tmp_path):
    config = parse_scenario(
        write(
            tmp_path,
            """
            [[sites]]
            site_id = "Valentia"
            latitude_deg = 51.9
            longitude_deg = -10.2
            """,
        )
    )
    assert config.site_ids == ("Valentia",)
    assert config.sites[0].latitude_deg == 51.9


def test_missing_file():
    with pytest.raises(ConfigError, match="not found"):
        parse_scenario("/nonexistent/scenario.toml")


def test_toml_syntax_error(tmp_path):
    with pytest.raises(ConfigError):
        parse_scenario(write(tmp_path, "theta_min_deg = ["))


def test_unknown_keys_rejected(tmp_path):
    with pytest.raises(ConfigError, match="unknown key 'theta_max_deg'"):
        parse_scenario(write(tmp_path, "theta_max_deg = 90"))
    with pytest.raises(ConfigError, match="unknown key 'orbit.height_m'"):
        parse_scenario(write(tmp_path, "[orbit]\nheight_m = 500e3"))
    with pytest.raises(ConfigError, match="unknown key 'link.gain'"):
        parse_scenario(write(tmp_path, "[link]\ngain = 3"))


def test_invalid_values_name_the_section(tmp_path):
    with pytest.raises(ConfigError, match=r"invalid value in \[link\]"):
        parse_scenario(write(tmp_path, "[link]\nzenith_transmittance = 1.5"))
    with pytest.raises(ConfigError, match="invalid scenario value"):
        parse_scenario(write(tmp_path, "theta_min_deg = 120"))


def test_invalid_protocol_lists_choices(tmp_path):
    with pytest.raises(ConfigError, match="plob"):
        parse_scenario(write(tmp_path, '[source]\nprotocol = "ekert91"'))


def test_overpass_hours_validation(tmp_path):
    config = parse_scenario(write(tmp_path, "overpass_hours = [6, 18]"))
    assert config.overpass_hours == (6, 18)
    with pytest.raises(ConfigError):
        parse_scenario(write(tmp_path, "overpass_hours = 12"))
    with pytest.raises(ConfigError):
        parse_scenario(write(tmp_path, "overpass_hours = [25]"))
    with pytest.raises(ConfigError):
        parse_scenario(write(tmp_path, "overpass_hours = [0, 0]"))


def test_output_format_validation(tmp_path):
    with pytest.raises(ConfigError):
        parse_scenario(write(tmp_path, 'output_format = "xml"'))


def test_with_overrides():
    config = ScenarioConfig()
    assert with_overrides(config) is config
    out = with_overrides(config, output_dir="elsewhere", output_format="json")
    assert out.output_dir == "elsewhere"
    assert out.output_format == "json"
    with pytest.raises(ConfigError):
        with_overrides(config, output_format="xml")


def test_site_validation():
    with pytest.raises(DomainError):
        Site("X", 90.0, 0.0)
    with pytest.raises(DomainError):
        Site("X", 0.0, 181.0)
    with pytest.raises(DomainError):
        Site("", 0.0, 0.0)


def test_scenario_validation():
    with pytest.raises(DomainError):
        ScenarioConfig(sites=())
    with pytest.raises(DomainError):
        ScenarioConfig(sites=(Site("A", 1.0, 2.0), Site("A", 3.0, 4.0)))
    with pytest.raises(DomainError):
        ScenarioConfig(overpass_hours=())
    with pytest.raises(DomainError):
        ScenarioConfig(overpass_hours=(0.5,))
