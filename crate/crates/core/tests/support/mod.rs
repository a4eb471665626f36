pub mod border_strips;
